#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsurf/scalar.hpp"

namespace qsurf {

/// A signed generator occurrence: `index` is 0-based, `sign` is +1 or -1.
///
/// Letters are totally ordered by generator index ascending, with the
/// positive letter before the negative one.
struct Letter {
  int index = 0;
  int sign = 1;

  Letter inverse() const { return {index, -sign}; }
  bool cancels(const Letter& other) const { return index == other.index && sign == -other.sign; }

  int key() const { return 2 * index + (sign < 0 ? 1 : 0); }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) { return a.key() <=> b.key(); }
};

/// A word in the letters of a free group. Not necessarily reduced.
using GroupWord = std::vector<Letter>;

GroupWord reduce_word(const GroupWord& word);
GroupWord inverse(const GroupWord& word);
/// Concatenation followed by free reduction.
GroupWord multiply(const GroupWord& lhs, const GroupWord& rhs);
/// Cyclic rotation starting at position `start` (taken modulo the length).
GroupWord rotate(const GroupWord& word, std::size_t start);
/// Free reduction followed by removal of cancelling letters across the wraparound.
GroupWord cyclically_reduce(const GroupWord& word);

/// A conjugacy class of a free group, stored as its canonical cyclic word:
/// cyclically reduced and lexicographically minimal among its rotations.
class ConjClass {
 public:
  /// The identity class.
  ConjClass() = default;

  const GroupWord& word() const { return word_; }
  bool is_trivial() const { return word_.empty(); }
  std::size_t length() const { return word_.size(); }

  friend bool operator==(const ConjClass&, const ConjClass&) = default;
  friend auto operator<=>(const ConjClass& a, const ConjClass& b) { return a.word_ <=> b.word_; }

 private:
  friend ConjClass canonical_conjugacy(const GroupWord& word);
  explicit ConjClass(GroupWord word) : word_(std::move(word)) {}
  GroupWord word_;
};

ConjClass canonical_conjugacy(const GroupWord& word);

/// Exponent-sum vector of `word` over `rank` generators.
VectorX<std::int64_t> abelianize(const GroupWord& word, int rank);

/// Serializes as space separated tokens "g<k>" / "g<k>^-1" (1-based).
std::string format_word(const GroupWord& word);
std::string format_word(const ConjClass& cls);
/// Inverse of `format_word`. Also accepts "g<k>^<n>" for any nonzero n.
/// Throws std::invalid_argument on malformed tokens.
GroupWord parse_word(std::string_view text);

}  // namespace qsurf
