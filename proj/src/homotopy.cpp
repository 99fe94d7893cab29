#include "qsurf/homotopy.hpp"

#include "crossing_sums.hpp"

namespace qsurf {

namespace {

ConjClass graft(const QuasiSurface& qs, const EdgePath& lhs, const EdgePath& rhs) {
  return canonical_conjugacy(qs.path_to_word(detail::concat(lhs, rhs)));
}

ExplicitDiagram lane_family(const QuasiSurface& qs, const std::vector<ConjClass>& xs) {
  std::vector<LaneDiagram> parts;
  parts.reserve(xs.size());
  for (const ConjClass& x : xs) parts.push_back(word_to_diagram(qs, x));
  return realize(qs, combine_generic(qs, parts));
}

}  // namespace

LoopCombination gate_brace_geometric(const QuasiSurface& qs, int gate, const ExplicitDiagram& diagram,
                                     const std::vector<int>& loops) {
  if (gate < 0 || gate >= qs.gate_count()) throw std::out_of_range("unknown gate index " + std::to_string(gate));
  if (loops.empty()) throw std::invalid_argument("a brace needs at least one argument");
  std::vector<std::vector<GateCrossing>> choices;
  for (int l : loops) {
    choices.push_back(diagram.crossings(gate, l));
    if (choices.back().empty()) return {};
  }

  LoopCombination out;
  std::vector<std::size_t> pick(loops.size(), 0);
  while (true) {
    EdgePath path;
    int sign = 1;
    for (std::size_t i = 0; i < loops.size(); ++i) {
      const GateCrossing& c = choices[i][pick[i]];
      sign *= c.sign;
      const EdgePath u = detail::gate_rotation(diagram.loops[static_cast<std::size_t>(loops[i])], c);
      path.insert(path.end(), u.begin(), u.end());
    }
    out.add(canonical_conjugacy(qs.path_to_word(path)), sign);

    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

LoopCombination gate_brace_geometric(const QuasiSurface& qs, int gate, const std::vector<ConjClass>& xs) {
  std::vector<int> loops(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) loops[i] = static_cast<int>(i);
  return gate_brace_geometric(qs, gate, lane_family(qs, xs), loops);
}

LoopCombination gate_brace_geometric(const QuasiSurface& qs, int gate, const std::vector<LoopCombination>& xs) {
  LoopCombination out;
  std::vector<ConjClass> args(xs.size());
  auto expand = [&](auto&& self, std::size_t i, const Integer& coeff) -> void {
    if (i == xs.size()) {
      out.add_scaled(gate_brace_geometric(qs, gate, args), coeff);
      return;
    }
    for (const auto& [cls, c] : xs[i]) {
      args[i] = cls;
      self(self, i + 1, Integer(coeff * c));
    }
  };
  expand(expand, 0, Integer(1));
  return out;
}

LoopCombination bullet(const QuasiSurface& qs, const GateOrientation& omega, const ExplicitDiagram& diagram, int a,
                       int b) {
  detail::check_pair(diagram, a, b);
  const EdgePath& la = diagram.loops[static_cast<std::size_t>(a)];
  const EdgePath& lb = diagram.loops[static_cast<std::size_t>(b)];
  LoopCombination out;
  detail::for_each_surface_term(diagram, a, b, [&](int letter_a, int letter_b, int sign) {
    out.add(graft(qs, detail::passage_rotation(la, letter_a), detail::passage_rotation(lb, letter_b)), sign);
  });
  detail::for_each_gate_term(diagram, omega, a, b,
                             [&](int, const GateCrossing& p, const GateCrossing& q, int sign) {
                               out.add(graft(qs, detail::gate_rotation(la, p), detail::gate_rotation(lb, q)), sign);
                             });
  return out;
}

LoopCombination bullet(const QuasiSurface& qs, const GateOrientation& omega, const ConjClass& x, const ConjClass& y) {
  return bullet(qs, omega, lane_family(qs, {x, y}), 0, 1);
}

LoopCombination bullet(const QuasiSurface& qs, const GateOrientation& omega, const LoopCombination& x,
                       const LoopCombination& y) {
  return bilinear(x, y, [&](const ConjClass& a, const ConjClass& b) { return bullet(qs, omega, a, b); });
}

LoopCombination second_bracket(const QuasiSurface& qs, const ConjClass& x, const ConjClass& y) {
  return second_bracket(qs, GateOrientation::counterclockwise(qs.gate_count()), x, y);
}

LoopCombination second_bracket(const QuasiSurface& qs, const GateOrientation& omega, const ConjClass& x,
                               const ConjClass& y) {
  const ExplicitDiagram d = lane_family(qs, {x, y});
  return bullet(qs, omega, d, 0, 1) - bullet(qs, omega, d, 1, 0);
}

LoopCombination second_bracket(const QuasiSurface& qs, const LoopCombination& x, const LoopCombination& y) {
  return second_bracket(qs, GateOrientation::counterclockwise(qs.gate_count()), x, y);
}

LoopCombination second_bracket(const QuasiSurface& qs, const GateOrientation& omega, const LoopCombination& x,
                               const LoopCombination& y) {
  return bilinear(x, y, [&](const ConjClass& a, const ConjClass& b) { return second_bracket(qs, omega, a, b); });
}

GroupRingElement kk_pairing(const QuasiSurface& qs, const GateOrientation& omega, const ExplicitDiagram& diagram,
                            int a, int b) {
  detail::check_pair(diagram, a, b);
  if (!diagram.based.at(static_cast<std::size_t>(b))) throw std::invalid_argument("second loop must be based");
  const EdgePath& la = diagram.loops[static_cast<std::size_t>(a)];
  const EdgePath& lb = diagram.loops[static_cast<std::size_t>(b)];
  GroupRingElement out;
  auto splice = [&](std::size_t at, const EdgePath& inner, int sign) {
    EdgePath path(lb.begin(), lb.begin() + static_cast<std::ptrdiff_t>(at));
    path.insert(path.end(), inner.begin(), inner.end());
    path.insert(path.end(), lb.begin() + static_cast<std::ptrdiff_t>(at), lb.end());
    out.add(qs.path_to_word(path), sign);
  };
  detail::for_each_surface_term(diagram, a, b, [&](int letter_a, int letter_b, int sign) {
    splice(static_cast<std::size_t>(letter_b + 1), detail::passage_rotation(la, letter_a), sign);
  });
  // Entries of the based loop splice in before the gate letter, exits after.
  detail::for_each_gate_term(diagram, omega, a, b, [&](int, const GateCrossing& p, const GateCrossing& q, int sign) {
    splice(static_cast<std::size_t>(q.sign > 0 ? q.letter : q.letter + 1), detail::gate_rotation(la, p), sign);
  });
  return out;
}

GroupRingElement kk_pairing(const QuasiSurface& qs, const GateOrientation& omega, const ConjClass& x,
                            const BasedLoop& y) {
  const LaneDiagram d = combine_generic(qs, {word_to_diagram(qs, x), based_diagram(qs, y)});
  return kk_pairing(qs, omega, realize(qs, d), 0, 1);
}

GroupRingElement kk_pairing(const QuasiSurface& qs, const GateOrientation& omega, const LoopCombination& x,
                            const GroupRingElement& y) {
  GroupRingElement out;
  for (const auto& [cls, cx] : x)
    for (const auto& [word, cy] : y) out.add_scaled(kk_pairing(qs, omega, cls, word), Integer(cx * cy));
  return out;
}

}  // namespace qsurf
