#include "knotflype/flype_graph.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace knotflype {

std::optional<std::size_t> FlypeGraph::find(const CanonicalCode& code) const {
  const auto it = index_.find(code);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FlypeGraph::add_node(const CanonicalCode& code) {
  const auto [it, inserted] = index_.try_emplace(code, nodes.size());
  if (inserted) {
    codes.push_back(code);
    nodes.push_back(diagram_from_code(code));
    expanded.push_back(0);
  }
  return it->second;
}

std::size_t FlypeGraph::move_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const FlypeEdge& e) { return e.source != e.target; }));
}

namespace {

struct Outgoing {
  FlypeSite site;
  CanonicalCode target;
  CrossingId created;
};

std::vector<Outgoing> expand(const Diagram& d, CanonOptions canon) {
  std::vector<Outgoing> out;
  for (auto& site : find_flype_sites(d)) {
    const FlypeResult r = apply_flype(d, site);
    Canonicalization c = canonicalize(r.diagram, canon);
    out.push_back(Outgoing{std::move(site), std::move(c.code), c.crossing_label[r.created]});
  }
  return out;
}

}  // namespace

void extend_flype_graph(FlypeGraph& graph, const GraphOptions& options) {
  if (options.mirror != graph.mirror) {
    throw KnotError(ErrorKind::kInvalidArgument, "mirror setting differs from the saved graph");
  }
  const CanonOptions canon{graph.mirror};
  const int jobs = detail::resolve_jobs(options.jobs);
  graph.complete = false;
  for (;;) {
    std::vector<std::size_t> frontier;
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
      if (!graph.expanded[i]) frontier.push_back(i);
    }
    if (frontier.empty()) {
      graph.complete = true;
      return;
    }
    std::vector<std::vector<Outgoing>> results(frontier.size());
    detail::parallel_for(frontier.size(), jobs,
                 [&](std::size_t i) { results[i] = expand(graph.nodes[frontier[i]], canon); });
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      // A node is merged whole or not at all.
      std::size_t fresh = 0;
      std::vector<CanonicalCode> seen_here;
      for (const auto& o : results[i]) {
        if (!graph.find(o.target) && std::find(seen_here.begin(), seen_here.end(), o.target) == seen_here.end()) {
          seen_here.push_back(o.target);
          ++fresh;
        }
      }
      if (graph.nodes.size() + fresh > options.max_nodes ||
          graph.edges.size() + results[i].size() > options.max_edges) {
        return;
      }
      for (auto& o : results[i]) {
        const std::size_t target = graph.add_node(o.target);
        graph.edges.push_back(FlypeEdge{frontier[i], target, std::move(o.site), o.created});
      }
      graph.expanded[frontier[i]] = 1;
    }
  }
}

FlypeGraph build_flype_graph(const Diagram& seed, const GraphOptions& options) {
  require_reduced_prime_alternating(seed);
  FlypeGraph graph;
  graph.mirror = options.mirror;
  if (options.max_nodes == 0) return graph;
  graph.add_node(canonical_code(seed, CanonOptions{options.mirror}));
  extend_flype_graph(graph, options);
  return graph;
}

}  // namespace knotflype
