#pragma once

#include <array>
#include <vector>

#include "knotflype/diagram.hpp"

namespace knotflype {

// A flype site. The flype circle passes through `crossing`, separating its
// darts at entry_slot and entry_slot+1 (which lead into the domain tangle)
// from the other two, and crosses target_edges[0] and target_edges[1]. The
// first target edge lies on the face at the corner between entry_slot+1 and
// entry_slot+2, the second on the face at the corner between entry_slot+3
// and entry_slot. `domain` lists the crossings inside the circle, sorted.
struct FlypeSite {
  CrossingId crossing = -1;
  int entry_slot = 0;
  std::array<EdgeId, 2> target_edges{-1, -1};
  std::vector<CrossingId> domain;

  friend bool operator==(const FlypeSite&, const FlypeSite&) = default;
  friend auto operator<=>(const FlypeSite&, const FlypeSite&) = default;
};

struct SiteOptions {
  // Drop sites whose flype returns an equivalent diagram (canonical_code
  // equality); these are isomorphisms rather than moves.
  bool nontrivial_only = false;
};

// Sites found by walking the three faces of each candidate circle. Requires
// a reduced, prime, alternating diagram (kInvalidDiagram otherwise). Sorted.
std::vector<FlypeSite> find_flype_sites(const Diagram& d, SiteOptions options = {});

// Same set by checking every crossing, split and edge pair for a separating
// cut. O(V * E^2); kept for cross-checking.
std::vector<FlypeSite> find_flype_sites_exhaustive(const Diagram& d);

// Checks a site against d; returns false with no side effects if it is not
// a legal site.
bool is_valid_site(const Diagram& d, const FlypeSite& s);

struct FlypeResult {
  Diagram diagram;
  // The new crossing keeps the id of the removed one.
  CrossingId created = -1;
};

// The domain is turned over (rotation reversed, over/under exchanged) and the
// crossing moves to the far side of it, joining the two target edges.
// Throws kInvalidSite when s is not a site of d.
FlypeResult apply_flype(const Diagram& d, const FlypeSite& s);

}  // namespace knotflype
