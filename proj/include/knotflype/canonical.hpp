#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotflype/diagram.hpp"

namespace knotflype {

// Canonical code of a diagram.
//
// Layout: [n, then for each crossing in discovery order: over bit of its
// entry dart, and for the four darts in rotation order starting at the entry
// dart, 4 * label + position of the mate]. The code is the lexicographic
// minimum over all root darts and over the allowed variants.
//
// Default equivalence is orientation-preserving sphere isomorphism that keeps
// over/under labels, extended by turning the sphere over (reflecting it while
// exchanging every crossing), which is a rotation of the ambient space and
// leaves the knot and the diagram's position unchanged. With `mirror` set,
// plain reflections are allowed too, so a diagram and its mirror image share
// one code.
using CanonicalCode = std::vector<int>;

struct CanonOptions {
  bool mirror = false;
};

CanonicalCode canonical_code(const Diagram& d, CanonOptions options = {});

// The code together with where each crossing of d lands in canonical_form(d).
struct Canonicalization {
  CanonicalCode code;
  std::vector<CrossingId> crossing_label;
};
Canonicalization canonicalize(const Diagram& d, CanonOptions options = {});
// The diagram rebuilt from its canonical code: a fixed representative of the
// equivalence class, with crossings numbered in discovery order.
Diagram canonical_form(const Diagram& d, CanonOptions options = {});
Diagram diagram_from_code(const CanonicalCode& code);

// FNV-1a over the code entries, printed as 16 hex digits.
std::string code_hash(const CanonicalCode& code);

// A dart bijection from a to b that commutes with rotation and mates and
// keeps over/under. When `reversed` is set, the map reverses rotation
// (next_ccw on a becomes prev_ccw on b) and exchanges over/under, i.e. it is
// an isomorphism from turn_over(a).
struct Isomorphism {
  std::vector<DartId> dart_map;
  bool reversed = false;
};

// Prefers an orientation-preserving isomorphism; falls back to a reversed one
// when `allow_reversed` is set. Among candidates the one with the smallest
// image of dart 0 is returned.
std::optional<Isomorphism> find_isomorphism(const Diagram& a, const Diagram& b,
                                            bool allow_reversed = true);
// Only isomorphisms sending crossing c of a to crossing crossing_map[c] of b.
std::optional<Isomorphism> find_isomorphism(const Diagram& a, const Diagram& b,
                                            const std::vector<CrossingId>& crossing_map,
                                            bool allow_reversed = true);

// The unique dart map from a to b sending dart 0 to `image_of_zero` that
// commutes with mates and with rotation (reversed rotation if
// `reverse_rotation`), and keeps over/under (exchanges it if
// `exchange_over`); nullopt if there is none.
std::optional<std::vector<DartId>> extend_dart_map(const Diagram& a, const Diagram& b, DartId image_of_zero,
                                                   bool reverse_rotation, bool exchange_over);

// Rebuilds d with darts renamed by a permutation of crossings and a rotation
// of each crossing's slots. Used to produce relabeled copies for testing.
Diagram relabel(const Diagram& d, const std::vector<CrossingId>& crossing_perm,
                const std::vector<int>& slot_shift);

}  // namespace knotflype
