#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "qsurf/quasi_lie.hpp"

using namespace qsurf;
using namespace qsurf::test;

TEST(MuTotal, Examples) {
  const QuasiSurface qs = fixture("QT2");
  EXPECT_TRUE(mu_total(qs, C("g1"), C("g1"), C("g1")).is_zero());
  const QuasiSurface qd = fixture("QD2");
  EXPECT_TRUE(mu_total(qd, C(""), C("g1 g2"), C("g3")).is_zero());
  std::mt19937_64 rng(51);
  for (int i = 0; i < 100; ++i) {
    const ConjClass x = random_class(rng, 3, 6), y = random_class(rng, 3, 6), z = random_class(rng, 3, 6);
    EXPECT_EQ(mu_total(qd, x, y, z), mu_total(qd, z, x, y));
  }
}

TEST(Jacobiator, QT2Vanishes) {
  const QuasiSurface qs = fixture("QT2");
  EXPECT_TRUE(jacobiator(qs, C("g1"), C("g1"), C("g1")).is_zero());
  const QuasiJacobiReport r = verify_quasi_jacobi(qs, C("g1"), C("g1 g1"), C("g1^-1"));
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.difference.is_zero());
}

TEST(Jacobiator, RepeatedArgumentWithZeroBrackets) {
  const QuasiSurface qs = fixture("QT2");
  EXPECT_TRUE(jacobiator(qs, C("g1"), C("g1"), C("g1 g1")).is_zero());
}

TEST(QuasiJacobi, RandomTriples) {
  std::mt19937_64 rng(52);
  for (const std::string name : {"QG1", "QD2", "QTRI"}) {
    const QuasiSurface qs = fixture(name);
    int nonzero = 0;
    for (int i = 0; i < 60; ++i) {
      const ConjClass x = random_class(rng, qs.rank(), 6), y = random_class(rng, qs.rank(), 6),
                      z = random_class(rng, qs.rank(), 6);
      const QuasiJacobiReport r = verify_quasi_jacobi(qs, x, y, z);
      EXPECT_TRUE(r.equal) << name << " " << format_word(x) << " | " << format_word(y) << " | " << format_word(z);
      EXPECT_EQ(r.rhs, mu_total(qs, x, y, z) - mu_total(qs, y, x, z));
      nonzero += r.lhs.is_zero() ? 0 : 1;
    }
    if (name != "QG1") EXPECT_GT(nonzero, 0) << name;
  }
}

TEST(QuasiJacobi, LinearCombinations) {
  const QuasiSurface qs = fixture("QD2");
  const LoopCombination x = L("g1 g2") + L("g3", -2), y = L("g2 g3^-1"), z = L("g1 g3", 3) + L("g2");
  EXPECT_TRUE(verify_quasi_jacobi(qs, x, y, z).equal);
}

TEST(QuasiJacobi, LoopInYDegenerates) {
  const QuasiSurface qs = build(qt2_with_y_loop());
  const QuasiJacobiReport r = verify_quasi_jacobi(qs, C("g1"), C("g2 g1"), C("g2 g2"));
  EXPECT_TRUE(r.lhs.is_zero());
  EXPECT_TRUE(r.rhs.is_zero());
}

TEST(SBracket, Examples) {
  const QuasiSurface qs = fixture("QT2");
  EXPECT_TRUE(s_bracket(qs, C("g1"), C("g1"), C("g1")).is_zero());
  const QuasiSurface qd = fixture("QD2");
  const LoopCombination x = L("g1 g2 g3^-1");
  EXPECT_EQ(s_bracket(qd, x, x, x), Integer(2) * mu_total(qd, x, x, x));
}

TEST(SBracket, FullySymmetric) {
  const QuasiSurface qs = fixture("QG1");
  std::mt19937_64 rng(53);
  for (int i = 0; i < 20; ++i) {
    std::array<LoopCombination, 3> a{LoopCombination::basis(random_class(rng, 2, 5)),
                                     LoopCombination::basis(random_class(rng, 2, 5)),
                                     LoopCombination::basis(random_class(rng, 2, 5))};
    const LoopCombination base = s_bracket(qs, a[0], a[1], a[2]);
    std::array<int, 3> p{0, 1, 2};
    while (std::next_permutation(p.begin(), p.end()))
      EXPECT_EQ(s_bracket(qs, a[static_cast<std::size_t>(p[0])], a[static_cast<std::size_t>(p[1])],
                          a[static_cast<std::size_t>(p[2])]),
                base);
  }
}

TEST(Diagnostics, QT2AndRandom) {
  const QuasiSurface qs = fixture("QT2");
  const LoopCombination z = L("g1");
  const PUDiagnostics d = p_and_u_diagnostics(qs, GateOrientation::counterclockwise(2), z, z, z);
  EXPECT_TRUE(d.p_is_u_sum);
  EXPECT_EQ(d.p, d.u_omega + d.u_reversed);
  EXPECT_TRUE(d.jacobiator_is_p_difference);

  const PUDiagnostics zero = p_and_u_diagnostics(qs, GateOrientation::counterclockwise(2), {}, {}, {});
  EXPECT_TRUE(zero.p.is_zero() && zero.p_swapped.is_zero() && zero.u_omega.is_zero() && zero.u_reversed.is_zero() &&
              zero.jacobiator.is_zero());

  const QuasiSurface qd = fixture("QD2");
  std::mt19937_64 rng(54);
  for (int i = 0; i < 30; ++i) {
    const GateOrientation omega = GateOrientation::from_mask(static_cast<unsigned>(rng()), qd.gate_count());
    const PUDiagnostics r = p_and_u_diagnostics(qd, omega, LoopCombination::basis(random_class(rng, 3, 5)),
                                                LoopCombination::basis(random_class(rng, 3, 5)),
                                                LoopCombination::basis(random_class(rng, 3, 5)));
    EXPECT_TRUE(r.p_is_u_sum);
    EXPECT_TRUE(r.jacobiator_is_p_difference);
  }
}

// Jacobiator = P(x,y,z) - P(y,x,z) for any bilinear product; here a twisted
// matrix product, which is neither commutative nor associative.
TEST(Diagnostics, PolynomialIdentityForAnyProduct) {
  using M = Eigen::Matrix2i;
  M twist;
  twist << 1, 2, -1, 3;
  auto mul = [&](const M& a, const M& b) -> M { return a * twist * b + 2 * b.transpose() * a; };
  auto bracket = [&](const M& a, const M& b) -> M { return mul(a, b) - mul(b, a); };
  std::mt19937_64 rng(55);
  auto random_matrix = [&] {
    M m;
    for (int i = 0; i < 4; ++i) m.data()[i] = static_cast<int>(rng() % 7) - 3;
    return m;
  };
  for (int i = 0; i < 200; ++i) {
    const M x = random_matrix(), y = random_matrix(), z = random_matrix();
    EXPECT_EQ(jacobiator_of(bracket, x, y, z), M(p_polynomial(mul, x, y, z) - p_polynomial(mul, y, x, z)));
  }
}

TEST(Delta3, Table) {
  // Hand table: d(1) = 1, d(-1) = 0.
  EXPECT_EQ(delta3({1, 1, 1}), 2);
  EXPECT_EQ(delta3({1, 1, -1}), -1);
  EXPECT_EQ(delta3({1, -1, -1}), 0);
  EXPECT_EQ(delta3({-1, -1, -1}), 1);
  for (int a : {1, -1})
    for (int b : {1, -1})
      for (int c : {1, -1}) {
        std::array<int, 3> t{a, b, c};
        const int value = delta3(t);
        std::sort(t.begin(), t.end());
        do EXPECT_EQ(delta3(t), value);
        while (std::next_permutation(t.begin(), t.end()));
        EXPECT_EQ(delta3({a, b, c}) - a * b * c, delta3_companion({a, b, c}));
      }
}
