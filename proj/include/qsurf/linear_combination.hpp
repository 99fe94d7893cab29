#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <type_traits>
#include <utility>

namespace qsurf {

/// Finite formal combination of basis elements with exact coefficients.
///
/// Terms are kept sorted by key and zero coefficients are never stored, so
/// two combinations are equal exactly when their term maps are equal.
template <typename Key, typename Scalar>
class LinearCombination {
 public:
  using key_type = Key;
  using scalar_type = Scalar;
  using container = std::map<Key, Scalar>;
  using const_iterator = typename container::const_iterator;

  LinearCombination() = default;
  LinearCombination(std::initializer_list<std::pair<Key, Scalar>> terms) {
    for (const auto& [key, coeff] : terms) add(key, coeff);
  }

  static LinearCombination basis(Key key) {
    LinearCombination out;
    out.add(std::move(key), Scalar(1));
    return out;
  }

  void add(const Key& key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(Key&& key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Adds `scale * other` in place.
  void add_scaled(const LinearCombination& other, const Scalar& scale) {
    if (scale == 0) return;
    for (const auto& [key, coeff] : other.terms_) add(key, Scalar(coeff * scale));
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const container& terms() const { return terms_; }

  /// Sum of all coefficients (the augmentation).
  Scalar coefficient_sum() const {
    Scalar total = 0;
    for (const auto& [key, coeff] : terms_) total += coeff;
    return total;
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [key, coeff] : other.terms_) add(key, coeff);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [key, coeff] : other.terms_) add(key, Scalar(-coeff));
    return *this;
  }
  LinearCombination& operator*=(const Scalar& scale) {
    if (scale == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= scale;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination lhs, const LinearCombination& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LinearCombination operator-(LinearCombination lhs, const LinearCombination& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend LinearCombination operator-(LinearCombination value) {
    for (auto& [key, coeff] : value.terms_) coeff = -coeff;
    return value;
  }
  friend LinearCombination operator*(const Scalar& scale, LinearCombination value) {
    value *= scale;
    return value;
  }
  friend LinearCombination operator*(LinearCombination value, const Scalar& scale) {
    value *= scale;
    return value;
  }
  friend bool operator==(const LinearCombination& lhs, const LinearCombination& rhs) {
    return lhs.terms_ == rhs.terms_;
  }
  friend bool operator!=(const LinearCombination& lhs, const LinearCombination& rhs) {
    return !(lhs == rhs);
  }

 private:
  container terms_;
};

/// Applies `fn` to every basis element and sums the scaled images.
template <typename Key, typename Scalar, typename Fn>
auto map_linear(const LinearCombination<Key, Scalar>& value, Fn&& fn) {
  using Out = std::invoke_result_t<Fn, const Key&>;
  Out result;
  for (const auto& [key, coeff] : value) result.add_scaled(fn(key), coeff);
  return result;
}

/// Bilinear extension of `fn` over two combinations.
template <typename KeyA, typename KeyB, typename Scalar, typename Fn>
auto bilinear(const LinearCombination<KeyA, Scalar>& lhs,
              const LinearCombination<KeyB, Scalar>& rhs, Fn&& fn) {
  using Out = std::invoke_result_t<Fn, const KeyA&, const KeyB&>;
  Out result;
  for (const auto& [a, ca] : lhs)
    for (const auto& [b, cb] : rhs) result.add_scaled(fn(a, b), Scalar(ca * cb));
  return result;
}

/// Trilinear extension of `fn` over three combinations.
template <typename Key, typename Scalar, typename Fn>
auto trilinear(const LinearCombination<Key, Scalar>& x, const LinearCombination<Key, Scalar>& y,
               const LinearCombination<Key, Scalar>& z, Fn&& fn) {
  using Out = std::invoke_result_t<Fn, const Key&, const Key&, const Key&>;
  Out result;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [c, cc] : z) result.add_scaled(fn(a, b, c), Scalar(ca * cb * cc));
  return result;
}

}  // namespace qsurf
