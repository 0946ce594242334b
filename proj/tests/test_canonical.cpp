#include <gtest/gtest.h>

#include "knotflype/canonical.hpp"
#include "knotflype/tangle.hpp"
#include "test_support.hpp"

namespace knotflype {
namespace {

TEST(Canonical, RelabelingsAgree) {
  std::mt19937 rng(11);
  for (const auto& e : testing::table_up_to(8)) {
    const auto code = canonical_code(e.diagram);
    for (int i = 0; i < 20; ++i) {
      EXPECT_EQ(canonical_code(testing::random_relabel(e.diagram, rng)), code) << e.id;
    }
  }
}

TEST(Canonical, DistinctKnotsDiffer) {
  EXPECT_NE(canonical_code(parse_pd(testing::kTrefoilPd)),
            canonical_code(parse_dt(std::string_view(testing::kFigureEightDt))));
  const auto table = testing::load_table();
  std::set<CanonicalCode> codes;
  for (const auto& e : table) codes.insert(canonical_code(e.diagram, CanonOptions{true}));
  EXPECT_EQ(codes.size(), table.size());
}

TEST(Canonical, TrefoilMirror) {
  const Diagram t = parse_pd(testing::kTrefoilPd);
  const Diagram m = reflect(t);
  EXPECT_NE(canonical_code(t), canonical_code(m));
  EXPECT_EQ(canonical_code(t, CanonOptions{true}), canonical_code(m, CanonOptions{true}));
  // Exchanging every crossing is also the mirror knot.
  EXPECT_EQ(canonical_code(toggle_all(t)), canonical_code(m));
}

TEST(Canonical, FigureEightIsAmphichiralDiagram) {
  const Diagram f = parse_dt(std::string_view(testing::kFigureEightDt));
  EXPECT_EQ(canonical_code(f), canonical_code(reflect(f)));
}

TEST(Canonical, TurnOverIsIdentified) {
  for (const auto& e : testing::table_up_to(8)) {
    EXPECT_EQ(canonical_code(turn_over(e.diagram)), canonical_code(e.diagram)) << e.id;
  }
}

TEST(Canonical, CodeRebuildsIsomorphicDiagram) {
  std::mt19937 rng(3);
  for (const auto& e : testing::table_up_to(8)) {
    const auto can = canonicalize(e.diagram);
    const Diagram rebuilt = diagram_from_code(can.code);
    EXPECT_EQ(canonical_code(rebuilt), can.code);
    EXPECT_TRUE(find_isomorphism(e.diagram, rebuilt).has_value());
    // crossing_label is a permutation.
    auto labels = can.crossing_label;
    std::sort(labels.begin(), labels.end());
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) EXPECT_EQ(labels[i], i);
  }
}

TEST(Canonical, IsomorphismMapsStructure) {
  std::mt19937 rng(5);
  const Diagram d = parse_dt(std::string_view("4,10,14,12,2,8,6"));
  const Diagram r = testing::random_relabel(d, rng);
  const auto iso = find_isomorphism(d, r, false);
  ASSERT_TRUE(iso.has_value());
  EXPECT_FALSE(iso->reversed);
  for (DartId x = 0; x < d.dart_count(); ++x) {
    EXPECT_EQ(iso->dart_map[d.mate(x)], r.mate(iso->dart_map[x]));
    EXPECT_EQ(iso->dart_map[Diagram::next_ccw(x)], Diagram::next_ccw(iso->dart_map[x]));
    EXPECT_EQ(d.is_over(x), r.is_over(iso->dart_map[x]));
  }
  EXPECT_FALSE(find_isomorphism(d, reflect(d), false).has_value() &&
               canonical_code(d) != canonical_code(reflect(d)));
}

TEST(Canonical, HashFormat) {
  const auto h = code_hash(canonical_code(parse_pd(testing::kTrefoilPd)));
  EXPECT_EQ(h.size(), 16u);
  EXPECT_EQ(h.find_first_not_of("0123456789abcdef"), std::string::npos);
  EXPECT_NE(h, code_hash(canonical_code(parse_dt(std::string_view(testing::kFigureEightDt)))));
}

TEST(Canonical, MalformedCode) {
  EXPECT_THROW(diagram_from_code({}), KnotError);
  EXPECT_THROW(diagram_from_code({2, 0, 1}), KnotError);
}

}  // namespace
}  // namespace knotflype
