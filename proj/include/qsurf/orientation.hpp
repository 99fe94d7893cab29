#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qsurf {

/// A direction on every gate: +1 for counterclockwise (the disk boundary
/// orientation), -1 for clockwise. Indexed by gate in declaration order.
class GateOrientation {
 public:
  GateOrientation() = default;
  explicit GateOrientation(std::vector<int> signs);

  /// All gates counterclockwise.
  static GateOrientation counterclockwise(int gate_count);
  /// Parses one '+' or '-' per gate. Throws std::invalid_argument when the
  /// length differs from `gate_count` or a character is not a sign.
  static GateOrientation parse(std::string_view text, int gate_count);
  /// The orientation numbered by the bits of `mask` (bit k set = clockwise).
  static GateOrientation from_mask(unsigned mask, int gate_count);

  int size() const { return static_cast<int>(signs_.size()); }
  int epsilon(int gate) const { return signs_.at(static_cast<std::size_t>(gate)); }
  bool is_ccw(int gate) const { return epsilon(gate) > 0; }
  const std::vector<int>& signs() const { return signs_; }

  GateOrientation flipped(int gate) const;
  /// Every gate flipped.
  GateOrientation reversed() const;
  std::string str() const;

  friend bool operator==(const GateOrientation&, const GateOrientation&) = default;

 private:
  std::vector<int> signs_;
};

}  // namespace qsurf
