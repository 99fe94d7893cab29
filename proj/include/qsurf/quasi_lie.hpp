#pragma once

#include <array>

#include "qsurf/homotopy.hpp"

namespace qsurf {

/// The 3-bracket: sum over all gates of the geometric 3-braces.
LoopCombination mu_total(const QuasiSurface& qs, const ConjClass& x, const ConjClass& y, const ConjClass& z);
LoopCombination mu_total(const QuasiSurface& qs, const LoopCombination& x, const LoopCombination& y,
                         const LoopCombination& z);

/// [[x,y],z] + [[y,z],x] + [[z,x],y] for any bilinear bracket.
template <typename T, typename Bracket>
T jacobiator_of(Bracket&& bracket, const T& x, const T& y, const T& z) {
  return bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
}

/// (xy)z + (yz)x + (zx)y + z(yx) + x(zy) + y(xz) for any bilinear product.
template <typename T, typename Product>
T p_polynomial(Product&& mul, const T& x, const T& y, const T& z) {
  return mul(mul(x, y), z) + mul(mul(y, z), x) + mul(mul(z, x), y) + mul(z, mul(y, x)) + mul(x, mul(z, y)) +
         mul(y, mul(x, z));
}

/// (xy)z + (yz)x + (zx)y for any bilinear product.
template <typename T, typename Product>
T u_polynomial(Product&& mul, const T& x, const T& y, const T& z) {
  return mul(mul(x, y), z) + mul(mul(y, z), x) + mul(mul(z, x), y);
}

/// Jacobiator of the second homotopy bracket.
LoopCombination jacobiator(const QuasiSurface& qs, const LoopCombination& x, const LoopCombination& y,
                           const LoopCombination& z);
LoopCombination jacobiator(const QuasiSurface& qs, const ConjClass& x, const ConjClass& y, const ConjClass& z);

struct QuasiJacobiReport {
  LoopCombination lhs;         ///< the Jacobiator
  LoopCombination rhs;         ///< mu(x,y,z) - mu(y,x,z)
  LoopCombination difference;  ///< lhs - rhs
  bool equal = false;
};

QuasiJacobiReport verify_quasi_jacobi(const QuasiSurface& qs, const LoopCombination& x, const LoopCombination& y,
                                      const LoopCombination& z);
QuasiJacobiReport verify_quasi_jacobi(const QuasiSurface& qs, const ConjClass& x, const ConjClass& y,
                                      const ConjClass& z);

/// s(x,y,z) = 2 mu(x,y,z) - [[x,y],z] - [[y,z],x] - [[z,x],y].
LoopCombination s_bracket(const QuasiSurface& qs, const LoopCombination& x, const LoopCombination& y,
                          const LoopCombination& z);
LoopCombination s_bracket(const QuasiSurface& qs, const ConjClass& x, const ConjClass& y, const ConjClass& z);

struct PUDiagnostics {
  LoopCombination p;            ///< P(x,y,z) with the product ._w
  LoopCombination p_swapped;    ///< P(y,x,z)
  LoopCombination u_omega;      ///< u_w(x,y,z)
  LoopCombination u_reversed;   ///< u for the reversed orientation
  LoopCombination jacobiator;
  bool p_is_u_sum = false;            ///< P = u_w + u_wbar
  bool jacobiator_is_p_difference = false;  ///< Jacobiator = P(x,y,z) - P(y,x,z)
};

PUDiagnostics p_and_u_diagnostics(const QuasiSurface& qs, const GateOrientation& omega, const LoopCombination& x,
                                  const LoopCombination& y, const LoopCombination& z);

/// Signs e, e', e''.
using SignTriple = std::array<int, 3>;

/// delta(e,e',e'') = e e' d(e'') + e e'' d(e') + e' e'' (1 - d(e)), where
/// d(1) = 1 and d(-1) = 0.
int delta3(const SignTriple& t);
/// e e' d(e'') + e e'' (1 - d(e')) + e' e'' (1 - d(e)), which should equal
/// delta3(t) - e e' e''.
int delta3_companion(const SignTriple& t);

}  // namespace qsurf
