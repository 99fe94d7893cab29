#include "qsurf/fox.hpp"

#include <string>

namespace qsurf {

FoxDerivative FoxDerivative::partial(int rank, int index) {
  FoxDerivative d;
  d.images.resize(static_cast<std::size_t>(rank));
  d.images.at(static_cast<std::size_t>(index)) = ring_element({}, 1);
  return d;
}

GroupRingElement fox_apply(const FoxDerivative& d, const GroupWord& word) {
  GroupRingElement out;
  GroupWord prefix;
  for (const Letter& letter : word) {
    if (letter.index < 0 || letter.index >= d.rank())
      throw ConfigurationError("Fox derivative has no image for generator g" + std::to_string(letter.index + 1));
    const GroupRingElement& image = d.images[static_cast<std::size_t>(letter.index)];
    if (letter.sign > 0) {
      out += left_multiply(prefix, image);
      prefix = multiply(prefix, {letter});
    } else {
      // d(u g^-1) contributes -u g^-1 d(g).
      prefix = multiply(prefix, {letter});
      out -= left_multiply(prefix, image);
    }
  }
  return out;
}

GroupRingElement fox_apply(const FoxDerivative& d, const GroupRingElement& x) {
  GroupRingElement out;
  for (const auto& [word, coeff] : x) out.add_scaled(fox_apply(d, word), coeff);
  return out;
}

GroupRingElement delta_apply(const FoxDerivative& d, const GroupWord& word) {
  GroupRingElement out;
  for (const auto& [a, coeff] : fox_apply(d, word)) {
    out.add(multiply(multiply(inverse(a), word), a), coeff);
  }
  return out;
}

GroupRingElement delta_apply(const FoxDerivative& d, const GroupRingElement& x) {
  GroupRingElement out;
  for (const auto& [word, coeff] : x) out.add_scaled(delta_apply(d, word), coeff);
  return out;
}

LoopCombination algebraic_brace(const std::vector<FoxDerivative>& ds,
                                const std::vector<LoopCombination>& xs) {
  if (ds.size() != xs.size() || ds.empty())
    throw std::invalid_argument("algebraic_brace needs m >= 1 derivatives and m arguments");
  GroupRingElement product = ring_element({}, 1);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    GroupRingElement factor;
    for (const auto& [cls, coeff] : xs[i]) factor.add_scaled(delta_apply(ds[i], cls.word()), coeff);
    product = ring_multiply(product, factor);
    if (product.is_zero()) return {};
  }
  return project_p(product);
}

LoopCombination algebraic_brace(const std::vector<FoxDerivative>& ds,
                                const std::vector<ConjClass>& xs) {
  std::vector<LoopCombination> lifted;
  lifted.reserve(xs.size());
  for (const ConjClass& cls : xs) lifted.push_back(LoopCombination::basis(cls));
  return algebraic_brace(ds, lifted);
}

FoxDerivative shift_derivative(const FoxDerivative& d, const GroupWord& g) {
  FoxDerivative out;
  out.images.reserve(d.images.size());
  for (const GroupRingElement& image : d.images) out.images.push_back(right_multiply(image, g));
  return out;
}

}  // namespace qsurf
