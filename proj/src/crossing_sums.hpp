#pragma once

#include <stdexcept>

#include "qsurf/diagram.hpp"
#include "qsurf/orientation.hpp"

namespace qsurf::detail {

// The loop read from its crossing with a gate: starting at the gate letter
// for an entry, right after it for an exit. Either way the rotated loop is
// closed at the gate's glued vertex.
inline EdgePath gate_rotation(const EdgePath& loop, const GateCrossing& c) {
  return rotate(loop, static_cast<std::size_t>(c.sign > 0 ? c.letter : c.letter + 1));
}

// The loop read from inside the disk passage whose entry letter is `letter`.
inline EdgePath passage_rotation(const EdgePath& loop, int letter) {
  return rotate(loop, static_cast<std::size_t>(letter + 1));
}

inline EdgePath concat(EdgePath lhs, const EdgePath& rhs) {
  lhs.insert(lhs.end(), rhs.begin(), rhs.end());
  return lhs;
}

inline void check_pair(const ExplicitDiagram& d, int a, int b) {
  const int n = static_cast<int>(d.loops.size());
  if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("loop index out of range");
  if (a == b) throw std::invalid_argument("intersection forms need two distinct loops of the family");
}

// Calls fn(gate, p, q, sign) for every (k, p, q) in T_omega(a, b): p on loop
// a, q on loop b, both on gate k, with q before p in the omega order. The
// sign is eps(omega, k) eps_p eps_q.
template <typename Fn>
void for_each_gate_term(const ExplicitDiagram& d, const GateOrientation& omega, int a, int b, Fn&& fn) {
  if (omega.size() != static_cast<int>(d.gate_order.size()))
    throw std::invalid_argument("orientation does not match the gate count");
  for (std::size_t k = 0; k < d.gate_order.size(); ++k) {
    const auto& order = d.gate_order[k];
    const int eps = omega.epsilon(static_cast<int>(k));
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = 0; j < order.size(); ++j) {
        if (i == j) continue;
        // Counterclockwise: q is listed before p. Clockwise: after.
        const bool q_first = eps > 0 ? j < i : j > i;
        if (!q_first || order[i].loop != a || order[j].loop != b) continue;
        fn(static_cast<int>(k), order[i], order[j], eps * order[i].sign * order[j].sign);
      }
    }
  }
}

// Calls fn(letter_a, letter_b, sign) for every surface crossing between the
// arcs of loops a and b, with the sign taken in the order (a, b).
template <typename Fn>
void for_each_surface_term(const ExplicitDiagram& d, int a, int b, Fn&& fn) {
  for (const SurfaceCrossing& c : d.surface_crossings) {
    if (c.first_loop == a && c.second_loop == b) {
      fn(c.first_letter, c.second_letter, c.sign);
    } else if (c.first_loop == b && c.second_loop == a) {
      fn(c.second_letter, c.first_letter, -c.sign);
    }
  }
}

}  // namespace qsurf::detail
