#include "qsurf/orientation.hpp"

#include <stdexcept>

namespace qsurf {

GateOrientation::GateOrientation(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("gate orientation signs must be +1 or -1");
}

GateOrientation GateOrientation::counterclockwise(int gate_count) {
  return GateOrientation(std::vector<int>(static_cast<std::size_t>(gate_count), 1));
}

GateOrientation GateOrientation::parse(std::string_view text, int gate_count) {
  if (static_cast<int>(text.size()) != gate_count)
    throw std::invalid_argument("omega has " + std::to_string(text.size()) + " signs but the quasi-surface has " +
                                std::to_string(gate_count) + " gates");
  std::vector<int> signs;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+') {
      signs.push_back(1);
    } else if (text[i] == '-') {
      signs.push_back(-1);
    } else {
      throw std::invalid_argument("omega: expected '+' or '-' at position " + std::to_string(i));
    }
  }
  return GateOrientation(std::move(signs));
}

GateOrientation GateOrientation::from_mask(unsigned mask, int gate_count) {
  std::vector<int> signs;
  for (int k = 0; k < gate_count; ++k) signs.push_back((mask >> k) & 1U ? -1 : 1);
  return GateOrientation(std::move(signs));
}

GateOrientation GateOrientation::flipped(int gate) const {
  GateOrientation out = *this;
  out.signs_.at(static_cast<std::size_t>(gate)) *= -1;
  return out;
}

GateOrientation GateOrientation::reversed() const {
  GateOrientation out = *this;
  for (int& s : out.signs_) s = -s;
  return out;
}

std::string GateOrientation::str() const {
  std::string out;
  for (int s : signs_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

}  // namespace qsurf
