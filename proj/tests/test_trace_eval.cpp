#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qsurf/trace_eval.hpp"

using namespace qsurf;
using namespace qsurf::test;

namespace {

MatrixQ matrix(std::initializer_list<std::initializer_list<long>> rows) {
  MatrixQ m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

}  // namespace

TEST(EvalTrace, Examples) {
  const RepresentationPoint scalar(1, {matrix({{3}})});
  EXPECT_EQ(eval_trace(scalar, L("g1 g1")), Rational(9));
  const RepresentationPoint unipotent(2, {matrix({{1, 1}, {0, 1}})});
  EXPECT_EQ(eval_trace(unipotent, L("g1 g1 g1")), Rational(2));
  const RepresentationPoint three(3, {matrix({{2, 1, 0}, {0, 1, 0}, {0, 0, 1}})});
  EXPECT_EQ(eval_trace(three, L("")), Rational(3));
  EXPECT_EQ(eval_trace(unipotent, L("")), Rational(2));
}

TEST(EvalTrace, InversesAndLinearity) {
  const RepresentationPoint rho(2, {matrix({{2, 1}, {1, 1}}), matrix({{1, 0}, {3, 1}})});
  EXPECT_EQ(rho.evaluate(W("g1 g1^-1")), MatrixQ::Identity(2, 2));
  EXPECT_EQ(eval_trace(rho, L("g1 g2") + L("g2^-1", 2)), Rational(eval_trace(rho, W("g1 g2")) + 2 * eval_trace(rho, W("g2^-1"))));
  EXPECT_EQ(exact_inverse(matrix({{2, 1}, {1, 1}})), matrix({{1, -1}, {-1, 2}}));
  EXPECT_EQ(determinant(matrix({{2, 1}, {1, 1}})), Rational(1));
}

TEST(EvalTrace, ConjugationInvariant) {
  std::mt19937_64 rng(61);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i < 50; ++i) {
      const RepresentationPoint rho = random_representation(2, n, rng());
      const GroupWord w = random_word(rng, 2, 6), u = random_word(rng, 2, 4);
      GroupWord conj = u;
      conj.insert(conj.end(), w.begin(), w.end());
      const GroupWord ui = inverse(u);
      conj.insert(conj.end(), ui.begin(), ui.end());
      EXPECT_EQ(eval_trace(rho, conj), eval_trace(rho, w));
    }
}

TEST(RepresentationPoint, RejectsBadImages) {
  EXPECT_THROW(RepresentationPoint(2, {matrix({{1, 2}, {2, 4}})}), std::invalid_argument);
  EXPECT_THROW(RepresentationPoint(2, {matrix({{1}})}), std::invalid_argument);
  const RepresentationPoint rho(1, {matrix({{2}})});
  EXPECT_THROW(rho.evaluate(W("g2")), std::out_of_range);
  EXPECT_THROW(exact_inverse(matrix({{0, 0}, {0, 1}})), std::invalid_argument);
}

TEST(InducedBracket, Examples) {
  const QuasiSurface qs = fixture("QT2");
  const RepresentationPoint rho(1, {matrix({{3}})});
  EXPECT_EQ(eval_induced_bracket(qs, rho, InducedForm::GateBrace, {L("g1"), L("g1")}, 0), Rational(9));
  EXPECT_EQ(eval_induced_bracket(qs, rho, InducedForm::GateBrace, {L("g1"), L("g1")}, 0), eval_trace(rho, L("g1 g1")));
  const QuasiSurface qg = fixture("QG1");
  std::mt19937_64 rng(62);
  for (int i = 0; i < 30; ++i) {
    const RepresentationPoint r = random_representation(2, 2, rng());
    const LoopCombination x = LoopCombination::basis(random_class(rng, 2, 5));
    EXPECT_EQ(eval_induced_bracket(qg, r, InducedForm::SecondBracket, {x, x}), Rational(0));
  }
}

TEST(InducedBracket, QuasiJacobiBalancesAtPoints) {
  const QuasiSurface qs = fixture("QG1");
  std::mt19937_64 rng(63);
  for (int i = 0; i < 30; ++i) {
    const RepresentationPoint rho = random_representation(2, 2, rng());
    const LoopCombination x = LoopCombination::basis(random_class(rng, 2, 5)),
                          y = LoopCombination::basis(random_class(rng, 2, 5)),
                          z = LoopCombination::basis(random_class(rng, 2, 5));
    EXPECT_EQ(eval_trace(rho, jacobiator(qs, x, y, z)),
              eval_induced_bracket(qs, rho, InducedForm::MuTotal, {x, y, z}) -
                  eval_induced_bracket(qs, rho, InducedForm::MuTotal, {y, x, z}));
  }
}

TEST(InducedBracket, ShiftedDerivativesAgreeAfterEvaluation) {
  const QuasiSurface qs = fixture("QD2");
  std::mt19937_64 rng(64);
  for (int i = 0; i < 30; ++i) {
    const RepresentationPoint rho = random_representation(3, 2, rng());
    const int k = static_cast<int>(rng() % 5);
    const FoxDerivative d = gate_derivative(qs, k), e = shift_derivative(d, random_word(rng, 3, 3));
    const std::vector<ConjClass> xs{random_class(rng, 3, 5), random_class(rng, 3, 5)};
    EXPECT_EQ(eval_trace(rho, algebraic_brace({d, d}, xs)), eval_trace(rho, algebraic_brace({e, e}, xs)));
  }
}

TEST(DerivationN1, Examples) {
  const QuasiSurface qt = fixture("QT2");
  const RepresentationPoint three(1, {matrix({{3}})});
  const EvaluationCheck c = verify_derivation_n1(qt, three, C("g1"), W("g1"), W("g1"));
  EXPECT_TRUE(c.equal);
  EXPECT_EQ(c.lhs, c.rhs);
  EXPECT_TRUE(verify_derivation_n1(qt, three, C("g1"), W(""), W("g1")).equal);

  const QuasiSurface qg = fixture("QG1");
  std::mt19937_64 rng(65);
  for (int i = 0; i < 50; ++i) {
    const RepresentationPoint rho = random_representation(2, 1, rng());
    const EvaluationCheck r =
        verify_derivation_n1(qg, rho, random_class(rng, 2, 5), random_word(rng, 2, 5), random_word(rng, 2, 5));
    EXPECT_TRUE(r.equal) << to_string(r.lhs) << " vs " << to_string(r.rhs);
  }
}

TEST(Sl2Consistency, CorrectedRelationHolds) {
  const QuasiSurface qs = fixture("QG1");
  const GateOrientation ccw = GateOrientation::counterclockwise(4);
  std::mt19937_64 rng(66);
  int literal = 0;
  for (int i = 0; i < 40; ++i) {
    const RepresentationPoint rho = random_representation(2, 2, rng(), true);
    const Sl2Check c = verify_sl2_consistency(qs, ccw, rho, C("g1"), W("g1"), W("g2"));
    EXPECT_TRUE(c.equal) << to_string(c.lhs) << " + " << to_string(c.determinant_term) << " vs " << to_string(c.rhs);
    EXPECT_EQ(c.literal_equal, c.determinant_term == 0);
    literal += c.literal_equal ? 1 : 0;
  }
  // The relation without the determinant term is not an identity here.
  EXPECT_LT(literal, 40);
}

TEST(Sl2Consistency, DegenerateCases) {
  const QuasiSurface qs = fixture("QG1");
  const GateOrientation ccw = GateOrientation::counterclockwise(4);
  const RepresentationPoint rho = random_representation(2, 2, 5, true);
  const Sl2Check inverse_pair = verify_sl2_consistency(qs, ccw, rho, C("g1 g2"), W("g2^-1"), W("g2"));
  EXPECT_TRUE(inverse_pair.equal);
  const QuasiSurface qy = build(qt2_with_y_loop());
  const RepresentationPoint r2 = random_representation(2, 2, 6, true);
  const Sl2Check inert = verify_sl2_consistency(qy, GateOrientation::counterclockwise(2), r2, C("g1"), W("g2"), W("g1 g2"));
  EXPECT_EQ(inert.lhs, Rational(0));
  EXPECT_EQ(inert.rhs, Rational(0));
  EXPECT_THROW(verify_sl2_consistency(qs, ccw, random_representation(2, 3, 1), C("g1"), W("g1"), W("g2")),
               std::invalid_argument);
}

TEST(RandomUnimodular, DeterministicWithUnitDeterminant) {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const MatrixQ m = random_unimodular(n, seed);
      EXPECT_EQ(m, random_unimodular(n, seed));
      const Rational d = determinant(m);
      EXPECT_TRUE(d == 1 || d == -1);
      EXPECT_EQ(determinant(random_unimodular(n, seed, true)), Rational(1));
      for (Eigen::Index i = 0; i < m.size(); ++i) EXPECT_EQ(m.data()[i].get_den(), 1);
    }
  const RepresentationPoint scalar = random_representation(2, 1, 9);
  for (int g = 0; g < 2; ++g) EXPECT_NE(scalar.image(g)(0, 0), Rational(0));
}
