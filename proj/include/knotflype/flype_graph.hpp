#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "knotflype/canonical.hpp"
#include "knotflype/flype.hpp"

namespace knotflype {

// A flype from node `source` to node `target`. The site is expressed on the
// source node's representative; `created` is the new crossing's id on the
// target node's representative.
struct FlypeEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  FlypeSite site;
  CrossingId created = -1;

  friend bool operator==(const FlypeEdge&, const FlypeEdge&) = default;
};

struct GraphOptions {
  std::size_t max_nodes = 100000;
  std::size_t max_edges = 1000000;
  int jobs = 1;
  bool mirror = false;
};

// Nodes are canonical forms, numbered in breadth-first discovery order.
// A node is expanded once all of its outgoing edges are recorded.
struct FlypeGraph {
  bool mirror = false;
  bool complete = false;
  std::vector<CanonicalCode> codes;
  std::vector<Diagram> nodes;
  std::vector<char> expanded;
  std::vector<FlypeEdge> edges;

  std::size_t node_count() const { return nodes.size(); }
  std::optional<std::size_t> find(const CanonicalCode& code) const;
  std::size_t add_node(const CanonicalCode& code);
  // Edges whose source and target differ.
  std::size_t move_count() const;

 private:
  std::map<CanonicalCode, std::size_t> index_;
};

// Breadth-first closure of the seed under flypes. Each level is expanded in
// parallel with `jobs` workers and merged in node order, so the result does
// not depend on the worker count. When a cap would be exceeded the search
// stops before the node that would exceed it and the graph is marked
// incomplete. Throws kInvalidDiagram unless the seed is reduced, prime and
// alternating.
FlypeGraph build_flype_graph(const Diagram& seed, const GraphOptions& options = {});

// Continues a saved graph: expands every unexpanded node until closure or a
// cap. options.mirror must match graph.mirror.
void extend_flype_graph(FlypeGraph& graph, const GraphOptions& options);

}  // namespace knotflype
