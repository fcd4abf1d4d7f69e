#include <gtest/gtest.h>

#include <sstream>

#include "riley/real_roots.hpp"
#include "riley/report.hpp"
#include "riley/riley.hpp"
#include "riley/signature.hpp"
#include "riley/verifier.hpp"

namespace riley {
namespace {

TEST(CheckConjecture, Examples) {
  const ConjectureRecord r31 = check_conjecture(KnotId::make(3, 1));
  EXPECT_EQ(r31.sigma_abs, 2);
  EXPECT_EQ(r31.real_roots, 1);
  EXPECT_EQ(r31.parabolic_degree, 1);
  EXPECT_TRUE(r31.holds);
  ASSERT_TRUE(r31.family.has_value());

  const ConjectureRecord r52 = check_conjecture(KnotId::make(5, 2));
  EXPECT_EQ(r52.sigma_abs, 0);
  EXPECT_EQ(r52.real_roots, 0);
  EXPECT_TRUE(r52.holds);

  const ConjectureRecord r75 = check_conjecture(KnotId::make(7, 5));
  EXPECT_EQ(r75.sigma_abs, 2);
  EXPECT_EQ(r75.real_roots, 1);
  EXPECT_TRUE(r75.holds);
  EXPECT_FALSE(r75.counterexample_candidate);
  EXPECT_FALSE(r75.y2_root_excluded);
}

TEST(CheckConjecture, RecordInvariants) {
  for (const KnotId& k : canonical_knots(31)) {
    const ConjectureRecord r = check_conjecture(k);
    EXPECT_EQ(r.parabolic_degree, (k.p() - 1) / 2);
    EXPECT_EQ(r.holds, 2 * r.real_roots >= r.sigma_abs);
    EXPECT_EQ(r.real_roots, count_real_roots(riley_parabolic(k)).total_real);
    EXPECT_EQ(r.sigma_abs, signature_two_bridge(k).sigma_abs);
  }
}

TEST(DoubleTwistOf, FindsFamilyPresentations) {
  for (Family f : {Family::EE, Family::EN, Family::OE, Family::ON})
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) {
        const DoubleTwist d = DoubleTwist::make(f, m, n);
        const auto found = double_twist_of(family_to_pq(d));
        ASSERT_TRUE(found.has_value()) << d.to_string();
        EXPECT_EQ(std::abs(signature_family(*found)), std::abs(signature_family(d)));
      }
}

TEST(CanonicalKnots, Enumeration) {
  const auto k3 = canonical_knots(3);
  ASSERT_EQ(k3.size(), 2u);  // b(3,1) and its mirror b(3,2)
  EXPECT_EQ(k3[0], KnotId::make(3, 1));

  std::vector<long> qs;
  for (const KnotId& k : canonical_knots(7))
    if (k.p() == 7) qs.push_back(k.q());
  EXPECT_EQ(qs, (std::vector<long>{1, 2, 3, 6}));

  const auto all = canonical_knots(99);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1], all[i]);
  for (const KnotId& k : all) EXPECT_TRUE(k.is_canonical());
}

TEST(ScanConjecture, SmallScanHolds) {
  const ScanResult r = scan_conjecture(7, 2);
  EXPECT_EQ(r.records.size(), canonical_knots(7).size());
  EXPECT_EQ(r.summary.records, static_cast<int>(r.records.size()));
  EXPECT_EQ(r.summary.holds, r.summary.records);
  EXPECT_EQ(r.summary.violations, 0);
  EXPECT_EQ(r.summary.errors, 0);
  for (const auto& rec : r.records) EXPECT_TRUE(rec.holds) << rec.knot.to_string();
}

TEST(ScanConjecture, OrderIndependentOfThreads) {
  std::ostringstream a, b;
  emit_report(scan_conjecture(25, 1).records, ReportFormat::jsonl, a);
  emit_report(scan_conjecture(25, 4).records, ReportFormat::jsonl, b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Expectation, Text) {
  EXPECT_EQ((Expectation{ExpectKind::exactly, 1}).to_string(), "exact-one");
  EXPECT_EQ((Expectation{ExpectKind::exactly, 0}).to_string(), "zero");
  EXPECT_EQ((Expectation{ExpectKind::at_least, 3}).to_string(), "at-least(3)");
  EXPECT_TRUE((Expectation{ExpectKind::at_least, 0}).satisfied_by(0));
  EXPECT_FALSE((Expectation{ExpectKind::exactly, 1}).satisfied_by(2));
}

TEST(Theorem1, RangeIsExact) {
  EXPECT_TRUE(theorem1_in_range(1, 1, Rational(2)));
  EXPECT_TRUE(theorem1_in_range(2, 3, Rational(2) - Rational(1, 96)));
  EXPECT_FALSE(theorem1_in_range(1, 1, Rational(5, 2)));
  // (2 - d)^2 = 4 - 1/(mn) exactly is excluded: mn = 1, x0^2 = 3 is irrational, so
  // test the boundary via x0 = 7/4: 49/16 > 3 in range, x0 = 3/2: 9/4 < 3 out.
  EXPECT_TRUE(theorem1_in_range(1, 1, Rational(7, 4)));
  EXPECT_FALSE(theorem1_in_range(1, 1, Rational(3, 2)));
  EXPECT_TRUE(theorem1_in_range(1, 1, Rational(-2)));
}

TEST(Theorem1, Examples) {
  const auto [ee, en] = check_theorem1(1, 1, Rational(2));
  EXPECT_EQ(ee.observed_roots, 1);
  EXPECT_TRUE(ee.holds);
  EXPECT_EQ(ee.expected.to_string(), "exact-one");
  EXPECT_EQ(en.observed_roots, 0);
  EXPECT_TRUE(en.holds);
  EXPECT_EQ(en.expected.to_string(), "zero");

  const auto [ee23, en23] = check_theorem1(2, 3, Rational(2) - Rational(1, 96));
  EXPECT_TRUE(ee23.in_range);
  EXPECT_EQ(ee23.observed_roots, 1);
  EXPECT_EQ(en23.observed_roots, 0);
}

TEST(Theorem1, OutOfRangeIsVacuous) {
  const auto [ee, en] = check_theorem1(1, 1, Rational(1));
  EXPECT_FALSE(ee.in_range);
  EXPECT_TRUE(ee.holds);
  EXPECT_TRUE(en.holds);
}

TEST(Theorem1, Grid) {
  for (const TheoremRecord& r : sweep_theorem1(5, 5)) {
    EXPECT_TRUE(r.in_range);
    EXPECT_TRUE(r.holds) << r.family.to_string() << " at " << to_string(r.x0);
    EXPECT_EQ(r.observed_roots, r.family.family == Family::EE ? 1 : 0);
  }
  EXPECT_EQ(sweep_theorem1(5, 5).size(), 100u);
}

TEST(Theorem2, Range) {
  // 2 cos(pi/6) = sqrt 3 for m = 1.
  EXPECT_TRUE(theorem2_in_range(1, Rational(7, 4)));
  EXPECT_FALSE(theorem2_in_range(1, Rational(17, 10)));
  EXPECT_TRUE(theorem2_in_range(1, Rational(-7, 4)));
  for (int m = 1; m <= 6; ++m) {
    EXPECT_TRUE(theorem2_in_range(m, Rational(2)));
    EXPECT_FALSE(theorem2_in_range(m, Rational(1)));
  }
}

TEST(Theorem2, Examples) {
  const auto [oe, on] = check_theorem2(1, 1, Rational(2));
  EXPECT_GE(on.observed_roots, 1);
  EXPECT_TRUE(on.holds);
  EXPECT_TRUE(oe.holds);
  EXPECT_EQ(oe.expected.to_string(), "at-least(0)");

  const auto [oe2, on2] = check_theorem2(1, 2, Rational(5, 2));
  EXPECT_GE(on2.observed_roots, 2);
  EXPECT_TRUE(on2.holds);
  // J(3,-4) = b(13, .), so the y-degree is (13 - 1) / 2.
  EXPECT_EQ(family_to_pq(on2.family).p(), 13);
  EXPECT_EQ(eval_bi(riley_closed_form(on2.family).phi_xy, Rational(5, 2)).degree(), 6);
}

TEST(Theorem2, Grid) {
  const auto records = sweep_theorem2(4, 4);
  EXPECT_EQ(records.size(), 4u * 4u * 3u * 2u);
  for (const TheoremRecord& r : records) {
    EXPECT_TRUE(r.in_range);
    EXPECT_TRUE(r.holds) << r.family.to_string() << " at " << to_string(r.x0);
    const int bound = r.family.family == Family::OE ? r.family.n - 1 : r.family.n;
    EXPECT_GE(r.observed_roots, bound);
  }
}

TEST(CrossValidate, Examples) {
  EXPECT_TRUE(cross_validate(DoubleTwist::make(Family::EE, 1, 1)).equal);
  EXPECT_TRUE(cross_validate(DoubleTwist::make(Family::EN, 1, 1)).equal);
  // J(3,2) and b(5,2) are two diagrams of the figure-eight knot.
  const DoubleTwist j32 = DoubleTwist::make(Family::OE, 1, 1);
  const UniPoly closed = eval_bi(riley_closed_form(j32).phi_xy, Rational(2));
  EXPECT_EQ(count_real_roots(closed).total_real, count_real_roots(riley_parabolic(KnotId::make(5, 2))).total_real);
}

TEST(CrossValidate, AllSmallFamilies) {
  for (Family f : {Family::EE, Family::EN, Family::OE, Family::ON})
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) {
        const CrossCheck c = cross_validate(DoubleTwist::make(f, m, n));
        EXPECT_TRUE(c.equal) << c.diff;
        EXPECT_TRUE(c.diff.empty());
      }
}

}  // namespace
}  // namespace riley
