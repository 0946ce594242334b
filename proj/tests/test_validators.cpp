#include <gtest/gtest.h>

#include "knotflype/bracket.hpp"
#include "knotflype/canonical.hpp"
#include "knotflype/tangle.hpp"
#include "test_support.hpp"

namespace knotflype {
namespace {

// Reference primality check: every pair of distinct edges is removed in turn
// and the crossing graph tested for connectivity, faces ignored.
bool prime_by_edge_cuts(const Diagram& d) {
  const int n = d.crossing_count();
  std::vector<EdgeId> edges;
  for (DartId x = 0; x < d.dart_count(); ++x) {
    if (d.edge_of(x) == x) edges.push_back(x);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      std::vector<char> seen(n, 0);
      std::vector<CrossingId> stack{0};
      seen[0] = 1;
      int count = 1;
      while (!stack.empty()) {
        const CrossingId c = stack.back();
        stack.pop_back();
        for (int k = 0; k < 4; ++k) {
          const DartId x = Diagram::dart(c, k);
          if (d.edge_of(x) == edges[i] || d.edge_of(x) == edges[j]) continue;
          const CrossingId t = Diagram::crossing_of(d.mate(x));
          if (!seen[t]) {
            seen[t] = 1;
            ++count;
            stack.push_back(t);
          }
        }
      }
      if (count < n) return false;
    }
  }
  return true;
}

TEST(Validate, Trefoil) {
  const Diagram d = parse_pd(testing::kTrefoilPd);
  EXPECT_TRUE(validate_alternating(d));
  EXPECT_TRUE(validate_reduced(d));
  EXPECT_TRUE(validate_prime(d));
}

TEST(Validate, FigureEight) {
  const Diagram d = parse_dt(std::string_view(testing::kFigureEightDt));
  EXPECT_TRUE(validate_reduced(d));
  EXPECT_TRUE(validate_prime(d));
}

TEST(Validate, NonAlternatingWitness) {
  const Diagram d = parse_dt(std::vector<int>{4, -6, 8, 2});
  const auto v = validate_alternating(d);
  ASSERT_FALSE(v);
  ASSERT_EQ(v.witness.size(), 1u);
  const EdgeId e = v.witness[0];
  EXPECT_EQ(d.is_over(e), d.is_over(d.mate(e)));
}

TEST(Validate, CurlWitness) {
  // Trefoil with a kink: labels 1 and 2 meet at one crossing.
  const Diagram kinked = parse_dt(std::vector<int>{2, 6, 8, 4});
  const auto v = validate_reduced(kinked);
  ASSERT_FALSE(v);
  ASSERT_EQ(v.witness.size(), 1u);
  const CrossingId c = v.witness[0];
  bool shared = false;
  for (int k = 0; k < 2; ++k) shared = shared || kinked.corner_face(c, k) == kinked.corner_face(c, k + 2);
  EXPECT_TRUE(shared);
}

TEST(Validate, GrannyIsComposite) {
  const Diagram g = testing::granny();
  EXPECT_EQ(g.crossing_count(), 6);
  EXPECT_TRUE(validate_alternating(g));
  EXPECT_TRUE(validate_reduced(g));
  const auto v = validate_prime(g);
  ASSERT_FALSE(v);
  ASSERT_EQ(v.witness.size(), 2u);
  // The two cut edges share both their faces.
  auto faces = [&](EdgeId e) {
    const FaceId a = g.face_of(e), b = g.face_of(g.mate(e));
    return std::pair(std::min(a, b), std::max(a, b));
  };
  EXPECT_EQ(faces(v.witness[0]), faces(v.witness[1]));
  EXPECT_FALSE(prime_by_edge_cuts(g));
}

TEST(Validate, PrimeAgreesWithEdgeCutOracleOnTable) {
  // Reduced alternating diagrams: a facial 2-edge cut exists iff any 2-edge
  // cut does, so the two checks agree on the table and on composites.
  for (const auto& e : testing::table_up_to(8)) {
    EXPECT_TRUE(validate_prime(e.diagram)) << e.id;
    EXPECT_TRUE(prime_by_edge_cuts(e.diagram)) << e.id;
  }
  const auto t = parse_pd(testing::kTrefoilPd);
  const auto f = parse_dt(std::string_view(testing::kFigureEightDt));
  const Diagram composite = testing::connected_sum(t, f);
  EXPECT_FALSE(validate_prime(composite));
  EXPECT_FALSE(prime_by_edge_cuts(composite));
}

TEST(Validate, VerdictsInvariantUnderRelabeling) {
  std::mt19937 rng(7);
  const std::vector<Diagram> samples = {parse_pd(testing::kTrefoilPd), testing::granny(),
                                        parse_dt(std::vector<int>{4, -6, 8, 2}),
                                        parse_dt(std::vector<int>{2, 6, 8, 4})};
  for (const auto& d : samples) {
    for (int i = 0; i < 50; ++i) {
      const Diagram r = testing::random_relabel(d, rng);
      EXPECT_EQ(validate_alternating(r).ok, validate_alternating(d).ok);
      EXPECT_EQ(validate_reduced(r).ok, validate_reduced(d).ok);
      EXPECT_EQ(validate_prime(r).ok, validate_prime(d).ok);
    }
  }
}

TEST(Validate, RequireThrowsInvalidDiagram) {
  try {
    require_reduced_prime_alternating(testing::granny());
    FAIL();
  } catch (const KnotError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidDiagram);
  }
}

TEST(Diagram, TurnOverKeepsWritheReflectNegates) {
  for (const auto& e : testing::table_up_to(7)) {
    const int w = writhe(e.diagram);
    EXPECT_EQ(writhe(turn_over(e.diagram)), w) << e.id;
    EXPECT_EQ(writhe(reflect(e.diagram)), -w) << e.id;
    EXPECT_EQ(writhe(toggle_all(e.diagram)), -w) << e.id;
  }
}

TEST(Diagram, RemoveCurls) {
  const Diagram kinked = parse_dt(std::vector<int>{2, 6, 8, 4});
  const auto r = remove_curls(kinked);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->crossing_count(), 3);
  EXPECT_EQ(canonical_code(*r, CanonOptions{true}), canonical_code(parse_pd(testing::kTrefoilPd), CanonOptions{true}));
  EXPECT_FALSE(remove_curls(torus_2(1)).has_value());
}

}  // namespace
}  // namespace knotflype
