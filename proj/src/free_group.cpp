#include "qsurf/free_group.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qsurf {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational value;
  if (value.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: '" + text + "'");
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  value.canonicalize();
  return value;
}

GroupWord reduce_word(const GroupWord& word) {
  GroupWord out;
  out.reserve(word.size());
  for (const Letter& letter : word) {
    if (!out.empty() && out.back().cancels(letter)) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

GroupWord inverse(const GroupWord& word) {
  GroupWord out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(it->inverse());
  return out;
}

GroupWord multiply(const GroupWord& lhs, const GroupWord& rhs) {
  GroupWord out = lhs;
  for (const Letter& letter : rhs) {
    if (!out.empty() && out.back().cancels(letter)) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

GroupWord rotate(const GroupWord& word, std::size_t start) {
  if (word.empty()) return word;
  start %= word.size();
  GroupWord out;
  out.reserve(word.size());
  out.insert(out.end(), word.begin() + static_cast<std::ptrdiff_t>(start), word.end());
  out.insert(out.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(start));
  return out;
}

GroupWord cyclically_reduce(const GroupWord& word) {
  GroupWord reduced = reduce_word(word);
  std::size_t lo = 0;
  std::size_t hi = reduced.size();
  while (hi - lo >= 2 && reduced[lo].cancels(reduced[hi - 1])) {
    ++lo;
    --hi;
  }
  return GroupWord(reduced.begin() + static_cast<std::ptrdiff_t>(lo),
                   reduced.begin() + static_cast<std::ptrdiff_t>(hi));
}

namespace {

// Least rotation (Booth's algorithm) on letter keys.
std::size_t least_rotation(const GroupWord& word) {
  const std::size_t n = word.size();
  if (n < 2) return 0;
  std::vector<int> keys(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) keys[i] = word[i % n].key();
  std::vector<long> failure(2 * n, -1);
  std::size_t best = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const int sj = keys[j];
    long i = failure[j - best - 1];
    while (i != -1 && sj != keys[best + static_cast<std::size_t>(i) + 1]) {
      if (sj < keys[best + static_cast<std::size_t>(i) + 1]) best = j - static_cast<std::size_t>(i) - 1;
      i = failure[static_cast<std::size_t>(i)];
    }
    if (sj != keys[best + static_cast<std::size_t>(i) + 1]) {
      if (sj < keys[best]) best = j;
      failure[j - best] = -1;
    } else {
      failure[j - best] = i + 1;
    }
  }
  return best % n;
}

}  // namespace

ConjClass canonical_conjugacy(const GroupWord& word) {
  GroupWord cyclic = cyclically_reduce(word);
  return ConjClass(rotate(cyclic, least_rotation(cyclic)));
}

VectorX<std::int64_t> abelianize(const GroupWord& word, int rank) {
  VectorX<std::int64_t> out = VectorX<std::int64_t>::Zero(rank);
  for (const Letter& letter : word) {
    if (letter.index < 0 || letter.index >= rank) throw std::out_of_range("letter outside generator range");
    out[letter.index] += letter.sign;
  }
  return out;
}

std::string format_word(const GroupWord& word) {
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out << ' ';
    out << 'g' << word[i].index + 1;
    if (word[i].sign < 0) out << "^-1";
  }
  return out.str();
}

std::string format_word(const ConjClass& cls) { return format_word(cls.word()); }

GroupWord parse_word(std::string_view text) {
  GroupWord out;
  std::size_t pos = 0;
  auto fail = [&](std::size_t at, const std::string& why) {
    throw std::invalid_argument("word parse error at position " + std::to_string(at) + ": " + why);
  };
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (text[pos] != 'g') fail(start, "expected token g<k>");
    ++pos;
    int index = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), index);
    if (ec != std::errc() || index < 1) fail(start, "expected positive generator index");
    pos = static_cast<std::size_t>(ptr - text.data());
    int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      auto [p2, ec2] = std::from_chars(text.data() + pos, text.data() + text.size(), power);
      if (ec2 != std::errc() || power == 0) fail(start, "expected nonzero exponent");
      pos = static_cast<std::size_t>(p2 - text.data());
    }
    if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t') fail(pos, "unexpected character");
    const Letter letter{index - 1, power > 0 ? 1 : -1};
    for (int i = 0; i < std::abs(power); ++i) out.push_back(letter);
  }
  return out;
}

}  // namespace qsurf
