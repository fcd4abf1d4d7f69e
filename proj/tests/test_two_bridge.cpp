#include <gtest/gtest.h>

#include <numeric>

#include "riley/two_bridge.hpp"

namespace riley {
namespace {

constexpr Family kFamilies[] = {Family::EE, Family::EN, Family::OE, Family::ON};

// Independent oracle: floor(jq/p) by repeated subtraction.
int floor_oracle_sign(long p, long q, long j) {
  long num = j * q, quotient = 0;
  while (num >= p) {
    num -= p;
    ++quotient;
  }
  while (num < 0) {
    num += p;
    --quotient;
  }
  return quotient % 2 == 0 ? 1 : -1;
}

TEST(KnotId, Normalize) {
  EXPECT_EQ(normalize(5, 3), KnotId::make(5, 2));
  EXPECT_EQ(normalize(3, 1), KnotId::make(3, 1));
  EXPECT_EQ(normalize(7, 5), KnotId::make(7, 3));
  EXPECT_EQ(normalize(7, 12).q(), 3);  // 12 = 5 mod 7
}

TEST(KnotId, Errors) {
  try {
    (void)KnotId::make(8, 3);
    FAIL();
  } catch (const InvalidKnot& e) {
    EXPECT_NE(std::string(e.what()).find("link"), std::string::npos);
  }
  EXPECT_THROW(KnotId::make(9, 3), InvalidKnot);
  EXPECT_THROW(KnotId::make(1, 0), InvalidKnot);
}

TEST(KnotId, PresentationIsKept) {
  const auto k = KnotId::make(7, 5);
  EXPECT_EQ(k.q(), 5);
  EXPECT_FALSE(k.is_canonical());
  EXPECT_EQ(k.canonical().q(), 3);
  EXPECT_EQ(KnotId::make(5, 2).schubert_q(), -3);
  EXPECT_EQ(KnotId::make(5, 3).schubert_q(), 3);
}

TEST(Epsilon, Examples) {
  EXPECT_EQ(epsilon_sequence(KnotId::make(3, 1)), (std::vector<int>{1, 1}));
  EXPECT_EQ(epsilon_sequence(KnotId::make(5, 3)), (std::vector<int>{1, -1, -1, 1}));
  EXPECT_EQ(epsilon(7, 5, 3), 1);
  EXPECT_THROW(epsilon(7, 5, 0), AlgebraError);
  EXPECT_THROW(epsilon(7, 5, 7), AlgebraError);
}

TEST(Epsilon, MatchesFloorOracleWithNegativeQ) {
  for (long p = 3; p <= 41; p += 2)
    for (long q = -p + 1; q < p; ++q)
      for (long j = 1; j < p; ++j) ASSERT_EQ(epsilon(p, q, j), floor_oracle_sign(p, q, j)) << p << ' ' << q << ' ' << j;
}

TEST(EpsilonFast, Examples) {
  EXPECT_EQ(epsilon_fast(DoubleTwist::make(Family::EE, 1, 1), 1), 1);
  EXPECT_EQ(epsilon_fast(DoubleTwist::make(Family::EN, 1, 1), 2), -1);
  EXPECT_EQ(epsilon(5, 3, 2), -1);
  EXPECT_EQ(epsilon_fast(DoubleTwist::make(Family::ON, 1, 1), 3), 1);
  EXPECT_THROW(epsilon_fast(DoubleTwist::make(Family::EE, 1, 1), 3), AlgebraError);
  EXPECT_THROW(epsilon_fast(DoubleTwist::make(Family::EE, 1, 1), 0), AlgebraError);
}

TEST(EpsilonFast, AgreesWithFloorFormulaExhaustively) {
  for (Family f : kFamilies)
    for (int m = 1; m <= 10; ++m)
      for (int n = 1; n <= 10; ++n) {
        const auto d = DoubleTwist::make(f, m, n);
        const auto k = family_to_pq(d);
        for (long j = 1; j < k.p(); ++j) ASSERT_EQ(epsilon_fast(d, j), epsilon(k.p(), k.q(), j)) << d.to_string() << " j=" << j;
      }
}

TEST(SchubertWord, Examples) {
  EXPECT_EQ(render_word_compact(schubert_word(KnotId::make(3, 1))), "ab");
  EXPECT_EQ(render_word(schubert_word(KnotId::make(5, 3))), "a b⁻¹ a⁻¹ b");
  EXPECT_EQ(render_word_compact(schubert_word(KnotId::make(5, 3))), "aBAb");
  // floor oracle over j = 1..6 for b(7,5): 0,1,2,2,3,4
  EXPECT_EQ(render_word_compact(schubert_word(KnotId::make(7, 5))), "aBabAb");
  EXPECT_EQ(render_epsilon(epsilon_sequence(KnotId::make(5, 3))), "+ - - +");
}

TEST(SchubertWord, ShapeAndPalindrome) {
  for (long p = 3; p <= 199; p += 2) {
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto k = KnotId::make(p, q);
      const auto w = schubert_word(k);
      ASSERT_EQ(static_cast<long>(w.letters.size()), p - 1);
      for (std::size_t i = 0; i < w.letters.size(); ++i)
        ASSERT_EQ(w.letters[i].generator, i % 2 == 0 ? Generator::a : Generator::b);
      const auto eps = epsilon_sequence(k);
      for (long j = 1; j < p; ++j)
        ASSERT_EQ(eps[static_cast<std::size_t>(j - 1)], eps[static_cast<std::size_t>(p - j - 1)]) << k.to_string();
    }
  }
}

TEST(FamilyWord, Examples) {
  EXPECT_EQ(render_word_compact(family_word(DoubleTwist::make(Family::EE, 1, 1))), "ab");
  EXPECT_EQ(render_word_compact(family_word(DoubleTwist::make(Family::EN, 1, 1))), "aBAb");
  EXPECT_EQ(render_word_compact(family_word(DoubleTwist::make(Family::ON, 1, 1))), "aBabAb");
}

TEST(FamilyWord, EqualsSchubertWordExhaustively) {
  for (Family f : kFamilies)
    for (int m = 1; m <= 8; ++m)
      for (int n = 1; n <= 8; ++n) {
        const auto d = DoubleTwist::make(f, m, n);
        ASSERT_EQ(family_word(d), schubert_word(family_to_pq(d))) << d.to_string();
      }
}

TEST(FamilyToPq, Examples) {
  EXPECT_EQ(family_to_pq(DoubleTwist::make(Family::EE, 1, 1)), KnotId::make(3, 1));
  EXPECT_EQ(family_to_pq(DoubleTwist::make(Family::EN, 1, 1)), KnotId::make(5, 3));
  EXPECT_EQ(family_to_pq(DoubleTwist::make(Family::ON, 1, 1)), KnotId::make(7, 5));
  EXPECT_EQ(family_to_pq(DoubleTwist::make(Family::OE, 2, 3)), KnotId::make(4 * 6 + 6 - 1, 4 * 6 - 1));
  EXPECT_EQ(DoubleTwist::make(Family::ON, 1, 1).to_string(), "J(3,-2)");
  EXPECT_THROW(DoubleTwist::make(Family::EE, 0, 1), AlgebraError);
}

TEST(Family, ParseNames) {
  for (Family f : kFamilies) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("XX"), AlgebraError);
}

}  // namespace
}  // namespace riley
