#include "qsurf/quasi_lie.hpp"

#include <stdexcept>

namespace qsurf {

namespace {

int d1(int e) {
  if (e != 1 && e != -1) throw std::invalid_argument("signs must be +1 or -1");
  return e > 0 ? 1 : 0;
}

LoopCombination single(const ConjClass& x) { return LoopCombination::basis(x); }

}  // namespace

LoopCombination mu_total(const QuasiSurface& qs, const ConjClass& x, const ConjClass& y, const ConjClass& z) {
  LoopCombination out;
  const std::vector<ConjClass> args{x, y, z};
  for (int k = 0; k < qs.gate_count(); ++k) out += gate_brace_geometric(qs, k, args);
  return out;
}

LoopCombination mu_total(const QuasiSurface& qs, const LoopCombination& x, const LoopCombination& y,
                         const LoopCombination& z) {
  return trilinear(x, y, z, [&](const ConjClass& a, const ConjClass& b, const ConjClass& c) {
    return mu_total(qs, a, b, c);
  });
}

LoopCombination jacobiator(const QuasiSurface& qs, const LoopCombination& x, const LoopCombination& y,
                           const LoopCombination& z) {
  return jacobiator_of(
      [&](const LoopCombination& a, const LoopCombination& b) { return second_bracket(qs, a, b); }, x, y, z);
}

LoopCombination jacobiator(const QuasiSurface& qs, const ConjClass& x, const ConjClass& y, const ConjClass& z) {
  return jacobiator(qs, single(x), single(y), single(z));
}

QuasiJacobiReport verify_quasi_jacobi(const QuasiSurface& qs, const LoopCombination& x, const LoopCombination& y,
                                      const LoopCombination& z) {
  QuasiJacobiReport report;
  report.lhs = jacobiator(qs, x, y, z);
  report.rhs = mu_total(qs, x, y, z) - mu_total(qs, y, x, z);
  report.difference = report.lhs - report.rhs;
  report.equal = report.difference.is_zero();
  return report;
}

QuasiJacobiReport verify_quasi_jacobi(const QuasiSurface& qs, const ConjClass& x, const ConjClass& y,
                                      const ConjClass& z) {
  return verify_quasi_jacobi(qs, single(x), single(y), single(z));
}

LoopCombination s_bracket(const QuasiSurface& qs, const LoopCombination& x, const LoopCombination& y,
                          const LoopCombination& z) {
  return Integer(2) * mu_total(qs, x, y, z) - jacobiator(qs, x, y, z);
}

LoopCombination s_bracket(const QuasiSurface& qs, const ConjClass& x, const ConjClass& y, const ConjClass& z) {
  return s_bracket(qs, single(x), single(y), single(z));
}

PUDiagnostics p_and_u_diagnostics(const QuasiSurface& qs, const GateOrientation& omega, const LoopCombination& x,
                                  const LoopCombination& y, const LoopCombination& z) {
  const GateOrientation reversed = omega.reversed();
  auto mul = [&](const LoopCombination& a, const LoopCombination& b) { return bullet(qs, omega, a, b); };
  auto mul_reversed = [&](const LoopCombination& a, const LoopCombination& b) { return bullet(qs, reversed, a, b); };
  PUDiagnostics out;
  out.p = p_polynomial(mul, x, y, z);
  out.p_swapped = p_polynomial(mul, y, x, z);
  out.u_omega = u_polynomial(mul, x, y, z);
  out.u_reversed = u_polynomial(mul_reversed, x, y, z);
  out.jacobiator = jacobiator(qs, x, y, z);
  out.p_is_u_sum = out.p == out.u_omega + out.u_reversed;
  out.jacobiator_is_p_difference = out.jacobiator == out.p - out.p_swapped;
  return out;
}

int delta3(const SignTriple& t) {
  const auto [e0, e1, e2] = t;
  return e0 * e1 * d1(e2) + e0 * e2 * d1(e1) + e1 * e2 * (1 - d1(e0));
}

int delta3_companion(const SignTriple& t) {
  const auto [e0, e1, e2] = t;
  return e0 * e1 * d1(e2) + e0 * e2 * (1 - d1(e1)) + e1 * e2 * (1 - d1(e0));
}

}  // namespace qsurf
