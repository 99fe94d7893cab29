#include "qsurf/homology.hpp"

#include "crossing_sums.hpp"

namespace qsurf {

H1Class homology_class(const QuasiSurface& qs, const GroupWord& word) { return abelianize(word, qs.rank()); }

H1Class homology_class(const QuasiSurface& qs, const ConjClass& cls) { return abelianize(cls.word(), qs.rank()); }

ConjClass representative(const H1Class& x) {
  GroupWord word;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const Letter letter{static_cast<int>(i), x[i] > 0 ? 1 : -1};
    for (std::int64_t n = 0; n < (x[i] > 0 ? x[i] : -x[i]); ++n) word.push_back(letter);
  }
  return canonical_conjugacy(word);
}

std::int64_t gate_covector(const QuasiSurface& qs, int gate, const H1Class& x) {
  if (x.size() != qs.rank()) throw std::invalid_argument("homology class has the wrong rank");
  std::int64_t total = 0;
  for (int i = 0; i < qs.rank(); ++i) total += x[i] * qs.gate_crossing_count(gate, i);
  return total;
}

std::int64_t first_form(const GateOrientation& omega, const ExplicitDiagram& diagram, int a, int b) {
  detail::check_pair(diagram, a, b);
  std::int64_t total = 0;
  detail::for_each_surface_term(diagram, a, b, [&](int, int, int sign) { total += sign; });
  detail::for_each_gate_term(diagram, omega, a, b,
                             [&](int, const GateCrossing&, const GateCrossing&, int sign) { total += sign; });
  return total;
}

std::int64_t first_form(const QuasiSurface& qs, const GateOrientation& omega, const LaneDiagram& a,
                        const LaneDiagram& b) {
  if (a.loops.size() != 1 || b.loops.size() != 1) throw std::invalid_argument("first_form takes single loops");
  return first_form(omega, realize(qs, combine_generic(qs, {a, b})), 0, 1);
}

std::int64_t first_form(const QuasiSurface& qs, const GateOrientation& omega, const H1Class& x, const H1Class& y) {
  return first_form(qs, omega, word_to_diagram(qs, representative(x)), word_to_diagram(qs, representative(y)));
}

std::int64_t second_form(const QuasiSurface& qs, const H1Class& x, const H1Class& y) {
  return second_form(qs, GateOrientation::counterclockwise(qs.gate_count()), x, y);
}

std::int64_t second_form(const QuasiSurface& qs, const GateOrientation& omega, const H1Class& x, const H1Class& y) {
  const ExplicitDiagram d = realize(qs, combine_generic(qs, {word_to_diagram(qs, representative(x)),
                                                             word_to_diagram(qs, representative(y))}));
  return first_form(omega, d, 0, 1) - first_form(omega, d, 1, 0);
}

MatrixX<std::int64_t> intersection_gram(const QuasiSurface& qs) {
  return intersection_gram(qs, GateOrientation::counterclockwise(qs.gate_count()));
}

MatrixX<std::int64_t> intersection_gram(const QuasiSurface& qs, const GateOrientation& omega) {
  const int n = qs.rank();
  MatrixX<std::int64_t> gram = MatrixX<std::int64_t>::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      gram(i, j) = second_form(qs, omega, H1Class::Unit(n, i), H1Class::Unit(n, j));
    }
  }
  return gram;
}

}  // namespace qsurf
