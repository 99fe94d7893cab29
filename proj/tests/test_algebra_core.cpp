#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace qsurf;
using namespace qsurf::test;

TEST(ReduceWord, Examples) {
  EXPECT_TRUE(reduce_word(W("g1 g1^-1")).empty());
  EXPECT_EQ(reduce_word(W("g1 g2 g2^-1 g1")), W("g1 g1"));
  EXPECT_TRUE(reduce_word({}).empty());
}

TEST(ReduceWord, NoAdjacentInversePairs) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 14), gen(0, 2), sgn(0, 1);
  for (int i = 0; i < 500; ++i) {
    GroupWord w;
    for (int n = len(rng); n > 0; --n) w.push_back({gen(rng), sgn(rng) ? 1 : -1});
    const GroupWord r = reduce_word(w);
    for (std::size_t j = 1; j < r.size(); ++j) EXPECT_FALSE(r[j - 1].cancels(r[j]));
    EXPECT_EQ(abelianize(r, 3), abelianize(w, 3));
    EXPECT_EQ(reduce_word(r), r);
  }
}

TEST(ParseWord, FormatsRoundTrip) {
  EXPECT_EQ(format_word(W("g1 g2^-1 g3")), "g1 g2^-1 g3");
  EXPECT_EQ(W("g2^3"), W("g2 g2 g2"));
  EXPECT_EQ(W("g1^-2"), W("g1^-1 g1^-1"));
  EXPECT_THROW(W("x1"), std::invalid_argument);
  EXPECT_THROW(W("g0"), std::invalid_argument);
  EXPECT_THROW(W("g1^0"), std::invalid_argument);
}

TEST(CanonicalConjugacy, Examples) {
  EXPECT_EQ(C("g1 g2 g1^-1"), C("g2"));
  EXPECT_EQ(C("g1 g2 g1^-1").word(), W("g2"));
  EXPECT_EQ(C("g2 g1").word(), W("g1 g2"));
  EXPECT_TRUE(C("").is_trivial());
}

// Minimal rotation by brute force over all rotations, against the library.
TEST(CanonicalConjugacy, MatchesBruteForceRotation) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const GroupWord w = random_word(rng, 2, 10);
    // Cyclic reduction by hand.
    GroupWord r = reduce_word(w);
    while (r.size() >= 2 && r.front().cancels(r.back())) r = GroupWord(r.begin() + 1, r.end() - 1);
    GroupWord best = r;
    for (std::size_t s = 1; s < r.size(); ++s) {
      GroupWord rot(r.begin() + static_cast<std::ptrdiff_t>(s), r.end());
      rot.insert(rot.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(s));
      best = std::min(best, rot);
    }
    EXPECT_EQ(canonical_conjugacy(w).word(), best) << format_word(w);
  }
}

TEST(CanonicalConjugacy, ConjugationInvariant) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const GroupWord w = random_word(rng, 3, 8), u = random_word(rng, 3, 5);
    EXPECT_EQ(canonical_conjugacy(multiply(multiply(u, w), inverse(u))), canonical_conjugacy(w));
    EXPECT_EQ(canonical_conjugacy(rotate(w, static_cast<std::size_t>(i))), canonical_conjugacy(w));
  }
}

TEST(CanonicalConjugacy, PeriodicWords) {
  EXPECT_EQ(C("g2 g1 g2 g1").word(), W("g1 g2 g1 g2"));
  EXPECT_EQ(C("g1^-1 g1^-1").word(), W("g1^-1 g1^-1"));
  EXPECT_NE(C("g1 g2"), C("g2 g1^-1"));
}

TEST(RingMultiply, Examples) {
  EXPECT_EQ(ring_multiply(R("g1"), R("g1^-1")), R(""));
  EXPECT_EQ(ring_multiply(R("g1") + R("g2"), R("g1")), R("g1 g1") + R("g2 g1"));
  EXPECT_TRUE(ring_multiply(GroupRingElement{}, R("g1") + R("g2", 4)).is_zero());
}

TEST(RingMultiply, AssociativeAndDistributive) {
  std::mt19937_64 rng(3);
  auto element = [&] {
    GroupRingElement x;
    for (int t = 0; t < 3; ++t) x.add(random_word(rng, 2, 4), static_cast<long>(rng() % 7) - 3);
    return x;
  };
  for (int i = 0; i < 200; ++i) {
    const GroupRingElement a = element(), b = element(), c = element();
    EXPECT_EQ(ring_multiply(ring_multiply(a, b), c), ring_multiply(a, ring_multiply(b, c)));
    EXPECT_EQ(ring_multiply(a, b + c), ring_multiply(a, b) + ring_multiply(a, c));
    EXPECT_EQ(augmentation(ring_multiply(a, b)), augmentation(a) * augmentation(b));
  }
}

TEST(ProjectP, Examples) {
  EXPECT_EQ(project_p(R("g1 g2") + R("g2 g1")), L("g1 g2", 2));
  EXPECT_TRUE(project_p(R("g1 g2 g1^-1") - R("g2")).is_zero());
  EXPECT_EQ(project_p(R("g1", 3)), L("g1", 3));
}

TEST(ProjectP, KillsCommutators) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const GroupRingElement u = R(format_word(random_word(rng, 3, 5))), v = R(format_word(random_word(rng, 3, 5)));
    EXPECT_TRUE(project_p(ring_multiply(u, v) - ring_multiply(v, u)).is_zero());
  }
}

TEST(Abelianize, Examples) {
  VectorX<std::int64_t> zero = VectorX<std::int64_t>::Zero(2);
  EXPECT_EQ(abelianize(W("g1 g2 g1^-1 g2^-1"), 2), zero);
  VectorX<std::int64_t> v(2);
  v << 2, -1;
  EXPECT_EQ(abelianize(W("g1 g1 g2^-1"), 2), v);
  EXPECT_EQ(abelianize({}, 2), zero);
}

TEST(LinearCombination, ZeroTermsAreDropped) {
  LoopCombination x = L("g1", 2);
  x.add(C("g1"), -2);
  EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(x, LoopCombination{});
  EXPECT_EQ((L("g1") + L("g2")) - L("g2"), L("g1"));
  EXPECT_EQ(L("g1") * Integer(0), LoopCombination{});
}
