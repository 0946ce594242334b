#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "knotflype/flype.hpp"

namespace knotflype {

// A start diagram and the sites of successive flypes. Step i acts on the
// result of step i-1. Crossing ids persist along the sequence: domain and
// bystander crossings keep theirs and the created crossing takes the id of
// the removed one, so step j removes the crossing created by step i < j
// exactly when both name the same crossing and no step in between does.
struct FlypeSequence {
  Diagram start;
  std::vector<FlypeSite> sites;
};

// Diagrams before and after every step (sites.size() + 1 entries).
// Throws kInvalidSite if a step does not apply.
std::vector<Diagram> sequence_diagrams(const FlypeSequence& seq);

// True when some step removes a crossing created by an earlier one.
bool has_create_remove_pair(const FlypeSequence& seq);

// For two successive flypes at different crossings, a pair (s, t) with s
// removing second.crossing on d and t then removing first.crossing, reaching
// the same diagram. The pair keeping both domains is preferred.
std::optional<std::pair<FlypeSite, FlypeSite>> commute_flypes(const Diagram& d, const FlypeSite& first,
                                                              const FlypeSite& second);

struct NormalizeStats {
  int commutes = 0;
  int merges = 0;        // two flypes replaced by one
  int cancellations = 0; // two flypes replaced by none
};

// Rewrites the sequence until no step removes a crossing created earlier.
// A dependent adjacent pair is merged into one flype (or dropped when the
// second undoes the first); an independent pair is swapped so that
// dependent steps become adjacent. The result starts at seq.start and ends
// at a diagram with the same canonical code as the input's end. Throws
// kConfigurationA when a dependent pair admits no single replacement.
FlypeSequence normalize_flype_sequence(const FlypeSequence& seq, NormalizeStats* stats = nullptr);

}  // namespace knotflype
