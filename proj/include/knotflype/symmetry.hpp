#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotflype/flype_graph.hpp"

namespace knotflype {

// A map automorphism of a diagram that keeps over/under labels.
struct Symmetry {
  std::vector<DartId> dart_map;
  int order = 1;
  bool orientation_preserving = true;
  // Cells mapped to themselves as sets, sorted.
  std::vector<FaceId> fixed_faces;
  std::vector<CrossingId> fixed_crossings;
  std::vector<EdgeId> fixed_edges;
};

// Fills order and fixed cells for a dart map already known to be an
// automorphism of d.
Symmetry make_symmetry(const Diagram& d, std::vector<DartId> dart_map, bool orientation_preserving);
Symmetry identity_symmetry(const Diagram& d);

// All automorphisms: orientation-preserving ones first, each group ordered by
// the image of dart 0. The identity comes first.
std::vector<Symmetry> automorphisms(const Diagram& d);

// Cycle notation of a permutation, fixed points omitted: "(0 4 8)(1 5 9)";
// "()" for the identity.
std::string cycle_notation(const std::vector<DartId>& perm);

bool is_odd_prime(int p);

// An orientation-preserving automorphism of order p fixing exactly two faces
// and no crossing or edge, if d has one.
std::optional<Symmetry> find_period_symmetry(const Diagram& d, int p);

// If d is the standard diagram of the (2, m) torus knot, returns m with the
// sign of torus_2(m) matching d up to equivalence.
std::optional<int> torus_pattern(const Diagram& d);

struct PeriodReport {
  int p = 0;
  Diagram diagram;
  Symmetry symmetry;
  std::size_t node = 0;  // index in the flype graph; 0 when no graph was built
};

struct AnalysisOptions {
  GraphOptions graph;
  // Skip the divisibility and torus shortcuts and always search the graph.
  bool shortcuts = true;
  // Keep scanning after the first witness.
  bool all_witnesses = false;
};

struct PeriodResult {
  std::optional<PeriodReport> report;
  std::vector<PeriodReport> witnesses;  // filled when all_witnesses is set
  // "found", "torus", "divisibility", "no-symmetry" or "inconclusive".
  std::string reason;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  bool complete = true;
};

// Throws kInvalidArgument unless p is an odd prime.
PeriodResult detect_period(const Diagram& seed, int p, const AnalysisOptions& options = {});
// Scans a graph already built for the seed; no shortcuts.
PeriodResult detect_period_in_graph(const FlypeGraph& graph, int p, bool all_witnesses = false, int jobs = 1);

// Orbit quotient of the diagram under the report's symmetry. The result has
// n/p crossings and is checked to be alternating (std::logic_error if not).
// Throws kInvalidReport when the symmetry is not a free action on darts or
// does not belong to the diagram.
Diagram quotient(const PeriodReport& report);

}  // namespace knotflype
