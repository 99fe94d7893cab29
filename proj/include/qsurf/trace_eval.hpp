#pragma once

#include <cstdint>
#include <vector>

#include "qsurf/homotopy.hpp"
#include "qsurf/quasi_lie.hpp"
#include "qsurf/scalar.hpp"

namespace qsurf {

/// Invertible rational matrices assigned to the free generators.
class RepresentationPoint {
 public:
  /// Throws std::invalid_argument when an image is not n x n or is singular.
  RepresentationPoint(int n, std::vector<MatrixQ> images);

  int dimension() const { return n_; }
  int rank() const { return static_cast<int>(images_.size()); }
  const MatrixQ& image(int generator) const;
  const MatrixQ& inverse_image(int generator) const;

  /// Matrix of a group word. Throws std::out_of_range for generators
  /// without an image.
  MatrixQ evaluate(const GroupWord& word) const;
  /// Matrix of a group-ring element.
  MatrixQ evaluate(const GroupRingElement& x) const;

 private:
  int n_;
  std::vector<MatrixQ> images_;
  std::vector<MatrixQ> inverses_;
};

Rational trace(const MatrixQ& m);
/// Exact determinant and inverse (full-pivot LU over the rationals).
Rational determinant(const MatrixQ& m);
/// Throws std::invalid_argument for singular matrices.
MatrixQ exact_inverse(const MatrixQ& m);

Rational eval_trace(const RepresentationPoint& rho, const GroupWord& word);
Rational eval_trace(const RepresentationPoint& rho, const ConjClass& x);
Rational eval_trace(const RepresentationPoint& rho, const LoopCombination& x);
Rational eval_trace(const RepresentationPoint& rho, const GroupRingElement& x);

enum class InducedForm {
  SecondBracket,  ///< two arguments
  MuTotal,        ///< three arguments
  GateBrace,      ///< m arguments on one gate
};

/// Trace of a bracket's value, which is the induced bracket on trace generators.
Rational eval_induced_bracket(const QuasiSurface& qs, const RepresentationPoint& rho, InducedForm form,
                              const std::vector<LoopCombination>& args, int gate = -1);

struct EvaluationCheck {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

/// At n = 1: tr[x, <uv>] = tr[x, <u>] tr(v) + tr(u) tr[x, <v>].
EvaluationCheck verify_derivation_n1(const QuasiSurface& qs, const RepresentationPoint& rho, const ConjClass& x,
                                     const BasedLoop& u, const BasedLoop& v);

struct Sl2Check {
  /// tr d(uv) + tr d(uv^-1) against tr d(u) tr(v) + tr(u) tr d(v), for the
  /// derivation d = x ._w (-).
  Rational lhs;
  Rational rhs;
  bool literal_equal = false;
  /// tr(v^-1 d(v)) tr(uv^-1): the derivative of det(v) in the GL2 trace
  /// relation tr(u)tr(v) = tr(uv) + det(v) tr(uv^-1).
  Rational determinant_term;
  /// lhs + determinant_term == rhs
  bool equal = false;
};

/// Trace relation check at a 2 x 2 point with determinant-one images.
/// Throws std::invalid_argument when n != 2 or an image has determinant != 1.
Sl2Check verify_sl2_consistency(const QuasiSurface& qs, const GateOrientation& omega, const RepresentationPoint& rho,
                                const ConjClass& x, const BasedLoop& u, const BasedLoop& v);

struct ProductExtensionCheck {
  bool jacobiator_leibniz = false;  ///< J(x,y,<z1 z2>) expands by Leibniz
  bool mu_leibniz = false;          ///< same for mu(x,y,.) - mu(y,x,.)
  bool generators_balance = false;  ///< quasi-Jacobi holds on <z1> and <z2>
  bool product_balances = false;    ///< and therefore on <z1 z2>
};

/// At n = 1, both sides of the quasi-Jacobi identity are derivations in the
/// third slot, so the identity on z1 and z2 carries over to z1 z2.
ProductExtensionCheck verify_product_extension_n1(const QuasiSurface& qs, const RepresentationPoint& rho,
                                                  const ConjClass& x, const ConjClass& y, const BasedLoop& z1,
                                                  const BasedLoop& z2);

/// Deterministic integer matrix with determinant +1 or -1, built as a product
/// of elementary matrices. With `special` the determinant is always +1.
MatrixQ random_unimodular(int n, std::uint64_t seed, bool special = false);

/// A representation point of the given rank: nonzero rationals for n = 1,
/// unimodular integer matrices otherwise.
RepresentationPoint random_representation(int rank, int n, std::uint64_t seed, bool special = false);

}  // namespace qsurf
