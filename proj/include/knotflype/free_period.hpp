#pragma once

#include <optional>
#include <string>

#include "knotflype/symmetry.hpp"
#include "knotflype/tangle.hpp"

namespace knotflype {

// Numerator closure of p copies of the tangle summed left to right followed
// by |n| full twists (2|n| horizontal crossings of sign n). Throws
// kInvalidArgument for an empty tangle or p not an odd prime, kNotAKnot,
// kNotAlternating, kNotReduced or kNotPrime when the closure is not a
// reduced prime alternating knot diagram.
Diagram construct_free_periodic(const Tangle& tangle, int p, int n);

struct FreePeriodReport {
  int p = 0;
  Tangle tangle;
  int twist_count = 0;
  Diagram diagram;
  std::size_t node = 0;
};

// Looks for the template in one diagram: two faces that every cut passes
// through, the cyclic chain of summands between them, a block of 2|n| equal
// single crossings and p equal tangles filling the rest. Every match is
// confirmed by rebuilding it with construct_free_periodic. Of several
// matches the one with the smallest |n| wins.
std::optional<FreePeriodReport> find_free_template(const Diagram& d, int p);

struct FreePeriodResult {
  std::optional<FreePeriodReport> report;
  // "found", "no-template" or "inconclusive".
  std::string reason;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  bool complete = true;
};

// Scans the flype graph of the seed in node order and returns the first
// node carrying the template. Throws kInvalidArgument unless p is an odd
// prime.
FreePeriodResult detect_free_period(const Diagram& seed, int p, const AnalysisOptions& options = {});
FreePeriodResult detect_free_period_in_graph(const FlypeGraph& graph, int p, int jobs = 1);

}  // namespace knotflype
