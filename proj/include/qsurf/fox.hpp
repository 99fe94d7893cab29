#pragma once

#include <stdexcept>
#include <vector>

#include "qsurf/group_ring.hpp"

namespace qsurf {

/// A left Fox derivative on Z[F], determined freely by its generator images.
///
/// `images[i]` is the value on generator i; values on inverses follow from
/// d(g^-1) = -g^-1 d(g), and on products from d(uv) = d(u) + u d(v).
struct FoxDerivative {
  std::vector<GroupRingElement> images;

  int rank() const { return static_cast<int>(images.size()); }

  /// The partial derivative with respect to generator `index`.
  static FoxDerivative partial(int rank, int index);
};

/// Thrown when a word uses a generator outside the derivative's domain.
struct ConfigurationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupRingElement fox_apply(const FoxDerivative& d, const GroupWord& word);
GroupRingElement fox_apply(const FoxDerivative& d, const GroupRingElement& x);

/// x -> sum_a (x/a) a^-1 x a, extended linearly. Vanishes on commutators.
GroupRingElement delta_apply(const FoxDerivative& d, const GroupWord& word);
GroupRingElement delta_apply(const FoxDerivative& d, const GroupRingElement& x);

/// p(Delta_1(x_1) ... Delta_m(x_m)), each class lifted to its canonical word.
LoopCombination algebraic_brace(const std::vector<FoxDerivative>& ds,
                                const std::vector<LoopCombination>& xs);
LoopCombination algebraic_brace(const std::vector<FoxDerivative>& ds,
                                const std::vector<ConjClass>& xs);

/// The derivative x -> d(x) g.
FoxDerivative shift_derivative(const FoxDerivative& d, const GroupWord& g);

}  // namespace qsurf
