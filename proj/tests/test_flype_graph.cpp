#include <gtest/gtest.h>

#include <set>

#include "knotflype/bracket.hpp"
#include "knotflype/serialize.hpp"
#include "knotflype/tangle.hpp"
#include "test_support.hpp"

namespace knotflype {
namespace {

// Two vertical twists, two single crossings, three vertical twists: the
// single crossings can sit together or on either side of a twist tangle.
Diagram seven_crossing_twist_pattern() {
  Tangle t = tangle_sum(vertical_twist(2), tangle_crossing(1));
  t = tangle_sum(tangle_sum(t, tangle_crossing(1)), vertical_twist(3));
  return numerator_closure(t);
}

// Codes reachable by at most `depth` flypes, using the brute-force site list.
std::set<CanonicalCode> reachable(const Diagram& seed, int depth) {
  std::set<CanonicalCode> seen{canonical_code(seed)};
  std::vector<Diagram> level{seed};
  for (int i = 0; i < depth; ++i) {
    std::vector<Diagram> next;
    for (const auto& d : level) {
      for (const auto& s : find_flype_sites_exhaustive(d)) {
        Diagram r = apply_flype(d, s).diagram;
        if (seen.insert(canonical_code(r)).second) next.push_back(std::move(r));
      }
    }
    level = std::move(next);
  }
  return seen;
}

std::set<CanonicalCode> node_codes(const FlypeGraph& g) { return {g.codes.begin(), g.codes.end()}; }

TEST(FlypeGraph, FigureEightSingleNode) {
  const auto g = build_flype_graph(parse_dt(std::string_view(testing::kFigureEightDt)));
  EXPECT_TRUE(g.complete);
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.move_count(), 0u);
}

TEST(FlypeGraph, TorusKnotsSingleNode) {
  for (int m : {3, 5, 7, 9}) {
    const auto g = build_flype_graph(torus_2(m));
    EXPECT_EQ(g.node_count(), 1u) << m;
    EXPECT_EQ(g.move_count(), 0u) << m;
  }
}

TEST(FlypeGraph, SevenCrossingTwistPattern) {
  const Diagram d = seven_crossing_twist_pattern();
  ASSERT_EQ(d.crossing_count(), 7);
  const auto g = build_flype_graph(d);
  EXPECT_TRUE(g.complete);
  EXPECT_GE(g.node_count(), 2u);
  const auto three = reachable(d, 3);
  EXPECT_EQ(node_codes(g), three);
  EXPECT_EQ(reachable(d, 4), three);
}

TEST(FlypeGraph, AgreesWithDepthBoundedSearchOnTable) {
  for (const auto& e : testing::table_up_to(8)) {
    const auto g = build_flype_graph(e.diagram);
    EXPECT_EQ(node_codes(g), reachable(e.diagram, static_cast<int>(g.node_count()))) << e.id;
  }
}

TEST(FlypeGraph, ClosedAndInvariant) {
  for (const auto& e : testing::table_up_to(8)) {
    const auto g = build_flype_graph(e.diagram);
    ASSERT_TRUE(g.complete);
    const auto bracket = kauffman_bracket(e.diagram);
    std::vector<std::size_t> out(g.node_count(), 0);
    for (const auto& edge : g.edges) {
      ++out[edge.source];
      const auto r = apply_flype(g.nodes[edge.source], edge.site);
      EXPECT_EQ(canonical_code(r.diagram), g.codes[edge.target]);
    }
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      EXPECT_EQ(out[i], find_flype_sites(g.nodes[i]).size()) << e.id;
      EXPECT_EQ(kauffman_bracket(g.nodes[i]), bracket) << e.id;
      EXPECT_EQ(g.nodes[i].crossing_count(), e.diagram.crossing_count());
      EXPECT_TRUE(g.expanded[i]);
    }
  }
}

TEST(FlypeGraph, SameResultForAnyWorkerCount) {
  for (const auto& e : testing::table_up_to(9)) {
    if (e.diagram.crossing_count() < 8) continue;
    GraphOptions one, four;
    four.jobs = 4;
    const auto a = build_flype_graph(e.diagram, one);
    const auto b = build_flype_graph(e.diagram, four);
    EXPECT_EQ(a.codes, b.codes) << e.id;
    EXPECT_EQ(a.edges, b.edges) << e.id;
    EXPECT_EQ(graph_to_json(a).dump(), graph_to_json(b).dump()) << e.id;
  }
}

TEST(FlypeGraph, TruncateAndResume) {
  const Diagram d = seven_crossing_twist_pattern();
  const auto full = build_flype_graph(d);
  GraphOptions capped;
  capped.max_nodes = 1;
  auto partial = build_flype_graph(d, capped);
  EXPECT_FALSE(partial.complete);
  EXPECT_LE(partial.node_count(), 1u);
  // Round trip through JSON, then continue without the cap.
  auto restored = graph_from_json(Json::parse(graph_to_json(partial).dump()));
  EXPECT_EQ(restored.codes, partial.codes);
  EXPECT_EQ(restored.edges, partial.edges);
  extend_flype_graph(restored, GraphOptions{});
  EXPECT_TRUE(restored.complete);
  EXPECT_EQ(node_codes(restored), node_codes(full));
  EXPECT_EQ(restored.edges.size(), full.edges.size());
}

TEST(FlypeGraph, EdgeCap) {
  GraphOptions capped;
  capped.max_edges = 3;
  const auto g = build_flype_graph(seven_crossing_twist_pattern(), capped);
  EXPECT_FALSE(g.complete);
  EXPECT_LE(g.edges.size(), 3u);
}

TEST(FlypeGraph, Dot) {
  const auto g = build_flype_graph(seven_crossing_twist_pattern());
  const auto dot = graph_to_dot(g);
  EXPECT_EQ(dot.rfind("digraph flypes {", 0), 0u);
  EXPECT_NE(dot.find("n=7\""), std::string::npos);
  EXPECT_NE(dot.find(code_hash(g.codes[0])), std::string::npos);
  EXPECT_EQ(static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '\n')), 2 + g.node_count() + g.edges.size());
}

TEST(FlypeGraph, JsonRejectsGarbage) {
  EXPECT_THROW(graph_from_json(Json::parse(R"({"nodes": 3})")), KnotError);
  EXPECT_THROW(graph_from_json(Json::parse(
                   R"({"mirror": false, "complete": true, "nodes": [{"id": 1, "code": [3,0,4,7,8,12,1,0,9,11,1,2,5,10,6,0], "expanded": true}], "edges": []})")),
               KnotError);
}

TEST(FlypeGraph, MirrorMode) {
  GraphOptions mirror;
  mirror.mirror = true;
  const Diagram t = parse_pd(testing::kTrefoilPd);
  EXPECT_EQ(build_flype_graph(t, mirror).codes, build_flype_graph(reflect(t), mirror).codes);
  EXPECT_NE(build_flype_graph(t).codes, build_flype_graph(reflect(t)).codes);
}

}  // namespace
}  // namespace knotflype
