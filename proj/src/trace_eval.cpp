#include "qsurf/trace_eval.hpp"

#include <Eigen/LU>
#include <random>
#include <stdexcept>

namespace qsurf {

Rational trace(const MatrixQ& m) {
  Rational total = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) total += m(i, i);
  return total;
}

Rational determinant(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  return Eigen::FullPivLU<MatrixQ>(m).determinant();
}

MatrixQ exact_inverse(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  Eigen::FullPivLU<MatrixQ> lu(m);
  if (!lu.isInvertible()) throw std::invalid_argument("matrix is singular");
  return lu.inverse();
}

RepresentationPoint::RepresentationPoint(int n, std::vector<MatrixQ> images) : n_(n), images_(std::move(images)) {
  if (n < 1) throw std::invalid_argument("representation dimension must be positive");
  for (std::size_t g = 0; g < images_.size(); ++g) {
    const MatrixQ& m = images_[g];
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("image of g" + std::to_string(g + 1) + " is not " + std::to_string(n) + "x" +
                                  std::to_string(n));
    if (determinant(m) == 0) throw std::invalid_argument("image of g" + std::to_string(g + 1) + " is singular");
    inverses_.push_back(exact_inverse(m));
  }
}

const MatrixQ& RepresentationPoint::image(int generator) const {
  if (generator < 0 || generator >= rank())
    throw std::out_of_range("no image for generator g" + std::to_string(generator + 1));
  return images_[static_cast<std::size_t>(generator)];
}

const MatrixQ& RepresentationPoint::inverse_image(int generator) const {
  image(generator);
  return inverses_[static_cast<std::size_t>(generator)];
}

MatrixQ RepresentationPoint::evaluate(const GroupWord& word) const {
  MatrixQ out = MatrixQ::Identity(n_, n_);
  for (const Letter& letter : word) {
    const MatrixQ next = out * (letter.sign > 0 ? image(letter.index) : inverse_image(letter.index));
    out = next;
  }
  return out;
}

MatrixQ RepresentationPoint::evaluate(const GroupRingElement& x) const {
  MatrixQ out = MatrixQ::Zero(n_, n_);
  for (const auto& [word, coeff] : x) out += Rational(coeff) * evaluate(word);
  return out;
}

Rational eval_trace(const RepresentationPoint& rho, const GroupWord& word) { return trace(rho.evaluate(word)); }

Rational eval_trace(const RepresentationPoint& rho, const ConjClass& x) { return eval_trace(rho, x.word()); }

Rational eval_trace(const RepresentationPoint& rho, const LoopCombination& x) {
  Rational total = 0;
  for (const auto& [cls, coeff] : x) total += Rational(coeff) * eval_trace(rho, cls);
  return total;
}

Rational eval_trace(const RepresentationPoint& rho, const GroupRingElement& x) {
  Rational total = 0;
  for (const auto& [word, coeff] : x) total += Rational(coeff) * eval_trace(rho, word);
  return total;
}

Rational eval_induced_bracket(const QuasiSurface& qs, const RepresentationPoint& rho, InducedForm form,
                              const std::vector<LoopCombination>& args, int gate) {
  switch (form) {
    case InducedForm::SecondBracket:
      if (args.size() != 2) throw std::invalid_argument("the 2-bracket takes two arguments");
      return eval_trace(rho, second_bracket(qs, args[0], args[1]));
    case InducedForm::MuTotal:
      if (args.size() != 3) throw std::invalid_argument("the 3-bracket takes three arguments");
      return eval_trace(rho, mu_total(qs, args[0], args[1], args[2]));
    case InducedForm::GateBrace:
      return eval_trace(rho, gate_brace_geometric(qs, gate, args));
  }
  throw std::invalid_argument("unknown bracket");
}

EvaluationCheck verify_derivation_n1(const QuasiSurface& qs, const RepresentationPoint& rho, const ConjClass& x,
                                     const BasedLoop& u, const BasedLoop& v) {
  if (rho.dimension() != 1) throw std::invalid_argument("verify_derivation_n1 needs a 1-dimensional point");
  auto bracket_trace = [&](const GroupWord& w) {
    return eval_trace(rho, second_bracket(qs, x, canonical_conjugacy(w)));
  };
  EvaluationCheck out;
  out.lhs = bracket_trace(multiply(u, v));
  out.rhs = bracket_trace(u) * eval_trace(rho, v) + eval_trace(rho, u) * bracket_trace(v);
  out.equal = out.lhs == out.rhs;
  return out;
}

Sl2Check verify_sl2_consistency(const QuasiSurface& qs, const GateOrientation& omega, const RepresentationPoint& rho,
                                const ConjClass& x, const BasedLoop& u, const BasedLoop& v) {
  if (rho.dimension() != 2) throw std::invalid_argument("verify_sl2_consistency needs a 2-dimensional point");
  for (int g = 0; g < rho.rank(); ++g)
    if (determinant(rho.image(g)) != 1)
      throw std::invalid_argument("image of g" + std::to_string(g + 1) + " does not have determinant 1");
  auto d = [&](const GroupWord& w) { return kk_pairing(qs, omega, x, reduce_word(w)); };
  const GroupWord v_inv = inverse(v);
  Sl2Check out;
  out.lhs = eval_trace(rho, d(multiply(u, v))) + eval_trace(rho, d(multiply(u, v_inv)));
  out.rhs = eval_trace(rho, d(u)) * eval_trace(rho, v) + eval_trace(rho, u) * eval_trace(rho, d(v));
  out.literal_equal = out.lhs == out.rhs;
  const MatrixQ dv = rho.evaluate(d(v));
  out.determinant_term = trace(rho.evaluate(v_inv) * dv) * eval_trace(rho, multiply(u, v_inv));
  out.equal = out.lhs + out.determinant_term == out.rhs;
  return out;
}

ProductExtensionCheck verify_product_extension_n1(const QuasiSurface& qs, const RepresentationPoint& rho,
                                                  const ConjClass& x, const ConjClass& y, const BasedLoop& z1,
                                                  const BasedLoop& z2) {
  if (rho.dimension() != 1) throw std::invalid_argument("verify_product_extension_n1 needs a 1-dimensional point");
  const LoopCombination lx = LoopCombination::basis(x);
  const LoopCombination ly = LoopCombination::basis(y);
  auto lhs = [&](const GroupWord& z) {
    return eval_trace(rho, jacobiator(qs, lx, ly, loop_element(z)));
  };
  auto rhs = [&](const GroupWord& z) {
    const LoopCombination lz = loop_element(z);
    return eval_trace(rho, mu_total(qs, lx, ly, lz) - mu_total(qs, ly, lx, lz));
  };
  const GroupWord z12 = multiply(z1, z2);
  const Rational t1 = eval_trace(rho, z1);
  const Rational t2 = eval_trace(rho, z2);
  ProductExtensionCheck out;
  out.jacobiator_leibniz = lhs(z12) == lhs(z1) * t2 + t1 * lhs(z2);
  out.mu_leibniz = rhs(z12) == rhs(z1) * t2 + t1 * rhs(z2);
  out.generators_balance = lhs(z1) == rhs(z1) && lhs(z2) == rhs(z2);
  out.product_balances = lhs(z12) == rhs(z12);
  return out;
}

MatrixQ random_unimodular(int n, std::uint64_t seed, bool special) {
  if (n < 1) throw std::invalid_argument("random_unimodular needs n >= 1");
  std::mt19937_64 rng(seed);
  MatrixQ m = MatrixQ::Identity(n, n);
  if (n > 1) {
    std::uniform_int_distribution<int> index(0, n - 1);
    std::uniform_int_distribution<int> amount(-2, 2);
    for (int step = 0; step < 3 * n; ++step) {
      const int i = index(rng);
      int j = index(rng);
      while (j == i) j = index(rng);
      const int c = amount(rng);
      if (c == 0) continue;
      m.row(i) += Rational(c) * m.row(j);
    }
  }
  if (!special && std::uniform_int_distribution<int>(0, 1)(rng) == 1) m.row(0) *= Rational(-1);
  return m;
}

RepresentationPoint random_representation(int rank, int n, std::uint64_t seed, bool special) {
  std::mt19937_64 rng(seed);
  std::vector<MatrixQ> images;
  for (int g = 0; g < rank; ++g) {
    if (n == 1 && !special) {
      std::uniform_int_distribution<int> num(1, 5);
      MatrixQ m(1, 1);
      Rational value(num(rng), num(rng));
      value.canonicalize();
      if (std::uniform_int_distribution<int>(0, 1)(rng)) value = -value;
      m(0, 0) = value;
      images.push_back(std::move(m));
    } else {
      images.push_back(random_unimodular(n, rng(), special));
    }
  }
  return RepresentationPoint(n, std::move(images));
}

}  // namespace qsurf
