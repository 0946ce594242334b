#include "knotflype/serialize.hpp"

#include <sstream>

#include "knotflype/codes.hpp"

namespace knotflype {

Json site_to_json(const FlypeSite& site) {
  return Json{{"crossing", site.crossing},
              {"entry_slot", site.entry_slot},
              {"target_edges", site.target_edges},
              {"domain", site.domain}};
}

FlypeSite site_from_json(const Json& j) {
  FlypeSite s;
  s.crossing = j.at("crossing").get<CrossingId>();
  s.entry_slot = j.at("entry_slot").get<int>();
  s.target_edges = j.at("target_edges").get<std::array<EdgeId, 2>>();
  s.domain = j.at("domain").get<std::vector<CrossingId>>();
  return s;
}

Json graph_to_json(const FlypeGraph& graph) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    nodes.push_back(Json{{"id", i},
                         {"hash", code_hash(graph.codes[i])},
                         {"crossings", graph.nodes[i].crossing_count()},
                         {"code", graph.codes[i]},
                         {"pd", export_pd(graph.nodes[i])},
                         {"expanded", graph.expanded[i] != 0}});
  }
  Json edges = Json::array();
  for (const auto& e : graph.edges) {
    edges.push_back(Json{{"source", e.source},
                         {"target", e.target},
                         {"site", site_to_json(e.site)},
                         {"removed", e.site.crossing},
                         {"created", e.created}});
  }
  return Json{{"mirror", graph.mirror}, {"complete", graph.complete}, {"nodes", nodes}, {"edges", edges}};
}

FlypeGraph graph_from_json(const Json& j) {
  try {
    FlypeGraph graph;
    graph.mirror = j.at("mirror").get<bool>();
    graph.complete = j.at("complete").get<bool>();
    for (const auto& node : j.at("nodes")) {
      const auto code = node.at("code").get<CanonicalCode>();
      if (graph.add_node(code) != node.at("id").get<std::size_t>()) {
        throw KnotError(ErrorKind::kMalformedCode, "graph node ids are not 0..N-1 in order");
      }
      graph.expanded.back() = node.at("expanded").get<bool>() ? 1 : 0;
    }
    for (const auto& e : j.at("edges")) {
      FlypeEdge edge{e.at("source").get<std::size_t>(), e.at("target").get<std::size_t>(),
                     site_from_json(e.at("site")), e.at("created").get<CrossingId>()};
      if (edge.source >= graph.node_count() || edge.target >= graph.node_count()) {
        throw KnotError(ErrorKind::kMalformedCode, "graph edge refers to a missing node");
      }
      graph.edges.push_back(std::move(edge));
    }
    return graph;
  } catch (const Json::exception& e) {
    throw KnotError(ErrorKind::kMalformedCode, std::string("bad graph document: ") + e.what());
  }
}

std::string graph_to_dot(const FlypeGraph& graph) {
  std::ostringstream out;
  out << "digraph flypes {\n";
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    out << "  n" << i << " [label=\"" << code_hash(graph.codes[i]) << " n=" << graph.nodes[i].crossing_count()
        << "\"];\n";
  }
  for (const auto& e : graph.edges) {
    out << "  n" << e.source << " -> n" << e.target << " [label=\"" << e.site.crossing << "/" << e.created
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Json period_report_to_json(const PeriodReport& report) {
  return Json{{"p", report.p},
              {"node", report.node},
              {"pd", export_pd(report.diagram)},
              {"order", report.symmetry.order},
              {"dart_permutation", cycle_notation(report.symmetry.dart_map)},
              {"fixed_faces", report.symmetry.fixed_faces}};
}

namespace {

Json graph_stats(std::size_t nodes, std::size_t edges, bool complete) {
  return Json{{"nodes", nodes}, {"edges", edges}, {"complete", complete}};
}

}  // namespace

Json period_result_to_json(const PeriodResult& result) {
  Json j{{"period", result.report ? period_report_to_json(*result.report) : Json(nullptr)},
         {"reason", result.reason}};
  if (result.nodes > 0) j["graph"] = graph_stats(result.nodes, result.edges, result.complete);
  if (!result.witnesses.empty()) {
    Json w = Json::array();
    for (const auto& r : result.witnesses) w.push_back(period_report_to_json(r));
    j["witnesses"] = w;
  }
  return j;
}

Json free_period_report_to_json(const FreePeriodReport& report) {
  return Json{{"p", report.p},
              {"node", report.node},
              {"pd", export_pd(report.diagram)},
              {"twist_count", report.twist_count},
              {"tangle_pd", tangle_pd(report.tangle)},
              {"tangle_crossings", report.tangle.crossing_count()}};
}

Json free_period_result_to_json(const FreePeriodResult& result) {
  Json j{{"free_period", result.report ? free_period_report_to_json(*result.report) : Json(nullptr)},
         {"reason", result.reason}};
  if (result.nodes > 0) j["graph"] = graph_stats(result.nodes, result.edges, result.complete);
  return j;
}

Json polynomial_to_json(const LaurentPolynomial& poly) {
  Json j = Json::object();
  for (const auto& [e, c] : poly.terms()) j[std::to_string(e)] = c;
  return j;
}

}  // namespace knotflype
