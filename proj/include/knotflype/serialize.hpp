#pragma once

#include <string>

#include <json.hpp>

#include "knotflype/bracket.hpp"
#include "knotflype/free_period.hpp"
#include "knotflype/symmetry.hpp"

namespace knotflype {

using Json = nlohmann::json;

// {"crossing", "entry_slot", "target_edges", "domain"}
Json site_to_json(const FlypeSite& site);
FlypeSite site_from_json(const Json& j);

// Graph document:
//   {"mirror", "complete",
//    "nodes": [{"id", "hash", "crossings", "code", "pd", "expanded"}],
//    "edges": [{"source", "target", "site", "removed", "created"}]}
// "removed" repeats site.crossing for readers that skip the site data.
Json graph_to_json(const FlypeGraph& graph);
// Rebuilds a graph saved by graph_to_json so extend_flype_graph can resume
// it. Nodes are rebuilt from their codes; pd and hash are ignored. Throws
// kMalformedCode on a document that does not describe a graph.
FlypeGraph graph_from_json(const Json& j);

// Nodes labeled "<hash> n=<crossings>", edges "<removed>/<created>".
std::string graph_to_dot(const FlypeGraph& graph);

// {"p", "node", "pd", "order", "dart_permutation", "fixed_faces"}
Json period_report_to_json(const PeriodReport& report);
// {"period": report or null, "reason"} plus "graph": {"nodes", "edges",
// "complete"} when a graph was built.
Json period_result_to_json(const PeriodResult& result);

// {"p", "node", "pd", "twist_count", "tangle_pd", "tangle_crossings"}
Json free_period_report_to_json(const FreePeriodReport& report);
Json free_period_result_to_json(const FreePeriodResult& result);

// Exponent (as a string key) to coefficient.
Json polynomial_to_json(const LaurentPolynomial& poly);

}  // namespace knotflype
