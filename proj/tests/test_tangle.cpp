#include <gtest/gtest.h>

#include "knotflype/bracket.hpp"
#include "knotflype/canonical.hpp"
#include "knotflype/tangle.hpp"
#include "test_support.hpp"

namespace knotflype {
namespace {

TEST(Tangle, TorusTrefoil) {
  const Diagram t = torus_2(3);
  EXPECT_EQ(t.crossing_count(), 3);
  EXPECT_EQ(component_count(t), 1);
  EXPECT_TRUE(validate_alternating(t));
  EXPECT_EQ(canonical_code(t, CanonOptions{true}), canonical_code(parse_pd(testing::kTrefoilPd), CanonOptions{true}));
}

TEST(Tangle, TorusLinksHaveTwoComponents) {
  EXPECT_EQ(component_count(torus_2(4)), 2);
  EXPECT_EQ(component_count(torus_2(5)), 1);
}

TEST(Tangle, FigureEightAsRational) {
  // Fraction 1/2 + 2 = 5/2.
  const Diagram f = numerator_closure(tangle_sum(vertical_twist(2), horizontal_twist(2)));
  EXPECT_EQ(canonical_code(f, CanonOptions{true}),
            canonical_code(parse_dt(std::string_view(testing::kFigureEightDt)), CanonOptions{true}));
}

TEST(Tangle, PretzelCounts) {
  const Diagram p = pretzel({3, 3, 3});
  EXPECT_EQ(p.crossing_count(), 9);
  EXPECT_EQ(component_count(p), 1);
  EXPECT_TRUE(validate_alternating(p));
  EXPECT_TRUE(validate_reduced(p));
  EXPECT_TRUE(validate_prime(p));
  EXPECT_EQ(pretzel({5, 5, 5}).crossing_count(), 15);
}

TEST(Tangle, RotateFourTimesIsIdentity) {
  const Tangle t = tangle_sum(vertical_twist(2), tangle_crossing(1));
  Tangle r = t;
  for (int i = 0; i < 4; ++i) r = tangle_rotate(r);
  EXPECT_EQ(tangle_code(r), tangle_code(t));
  EXPECT_NE(tangle_code(tangle_rotate(t)), tangle_code(t));
}

TEST(Tangle, RotatedCrossingIsOppositeSign) {
  EXPECT_EQ(tangle_code(tangle_rotate(tangle_crossing(1))), tangle_code(tangle_crossing(-1)));
}

TEST(Tangle, ExtractSingleCrossing) {
  const Diagram d = torus_2(3);
  for (CrossingId c = 0; c < 3; ++c) {
    const Tangle t = extract_tangle(d, {c}, {Diagram::dart(c, 0), Diagram::dart(c, 1), Diagram::dart(c, 2),
                                             Diagram::dart(c, 3)});
    EXPECT_EQ(tangle_code(t), tangle_code(tangle_crossing(d.over_pair(c) == 1 ? 1 : -1)));
  }
  EXPECT_THROW(extract_tangle(d, {0, 1}, {0, 1, 2, 3}), KnotError);
}

TEST(Tangle, ClosureErrors) {
  EXPECT_THROW(numerator_closure(tangle_zero()), KnotError);
  EXPECT_THROW(numerator_closure(tangle_infinity()), KnotError);
}

TEST(Tangle, PdFragmentNamesPorts) {
  // Tuples start at an under dart, as in PD codes.
  EXPECT_EQ(tangle_pd(tangle_crossing(1)), "X(NE,NW,SW,SE)");
  EXPECT_EQ(tangle_pd(tangle_crossing(-1)), "X(NW,SW,SE,NE)");
}

}  // namespace
}  // namespace knotflype
