#include "qsurf/group_ring.hpp"

#include <sstream>

namespace qsurf {

GroupRingElement ring_element(const GroupWord& word, const Integer& coeff) {
  GroupRingElement out;
  out.add(reduce_word(word), coeff);
  return out;
}

LoopCombination loop_element(const GroupWord& word, const Integer& coeff) {
  LoopCombination out;
  out.add(canonical_conjugacy(word), coeff);
  return out;
}

GroupRingElement ring_multiply(const GroupRingElement& x, const GroupRingElement& y) {
  GroupRingElement out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) out.add(multiply(u, v), Integer(cu * cv));
  return out;
}

GroupRingElement left_multiply(const GroupWord& g, const GroupRingElement& x) {
  GroupRingElement out;
  for (const auto& [u, cu] : x) out.add(multiply(g, u), cu);
  return out;
}

GroupRingElement right_multiply(const GroupRingElement& x, const GroupWord& g) {
  GroupRingElement out;
  for (const auto& [u, cu] : x) out.add(multiply(u, g), cu);
  return out;
}

LoopCombination project_p(const GroupRingElement& x) {
  LoopCombination out;
  for (const auto& [u, cu] : x) out.add(canonical_conjugacy(u), cu);
  return out;
}

Integer augmentation(const GroupRingElement& x) { return x.coefficient_sum(); }

namespace {

template <typename Combination>
std::string format_terms(const Combination& x) {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const auto& [key, coeff] : x) {
    if (!first) out << ", ";
    first = false;
    out << '(' << coeff.get_str() << ", \"" << format_word(key) << "\")";
  }
  out << ']';
  return out.str();
}

}  // namespace

std::string format_combination(const GroupRingElement& x) { return format_terms(x); }
std::string format_combination(const LoopCombination& x) { return format_terms(x); }

}  // namespace qsurf
