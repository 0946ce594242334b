#pragma once

#include <array>
#include <string>
#include <vector>

#include "knotflype/diagram.hpp"

namespace knotflype {

// Four-ended tangle. Ports are numbered counterclockwise around the disk:
// 0 = NE, 1 = NW, 2 = SW, 3 = SE. Crossing c owns darts 4c..4c+3 exactly as
// in Diagram; mates has 4n+4 entries, entry 4n+k being the port k end.
// A port may be mated with another port (an arc with no crossings).
struct Tangle {
  enum Port { kNE = 0, kNW = 1, kSW = 2, kSE = 3 };

  std::vector<DartId> mates;
  std::vector<std::uint8_t> over_pairs;

  int crossing_count() const { return static_cast<int>(over_pairs.size()); }
  DartId port(int k) const { return 4 * crossing_count() + k; }
};

// One crossing with its strands joining NW-SE and NE-SW. Sign +1 puts the
// NW-SE strand over.
Tangle tangle_crossing(int sign);
// Arcs NW-NE and SW-SE.
Tangle tangle_zero();
// Arcs NW-SW and NE-SE.
Tangle tangle_infinity();

// a to the left of b: a.NE-b.NW and a.SE-b.SW are joined.
Tangle tangle_sum(const Tangle& a, const Tangle& b);
// a above b: a.SW-b.NW and a.SE-b.NE are joined.
Tangle tangle_product(const Tangle& a, const Tangle& b);
// Quarter turn counterclockwise: the strand at port k moves to port k+1.
Tangle tangle_rotate(const Tangle& t);
// |m| crossings of sign(m) summed left to right; tangle_zero() for m = 0.
Tangle horizontal_twist(int m);
// |m| crossings of sign(m) stacked top to bottom; tangle_infinity() for m = 0.
Tangle vertical_twist(int m);

// Numerator closure joins NW-NE and SW-SE; denominator closure joins NW-SW
// and NE-SE. Both throw kInvalidArgument if a crossingless circle appears.
Diagram numerator_closure(const Tangle& t);
Diagram denominator_closure(const Tangle& t);

// Sub-tangle of d on a set of crossings with exactly four darts leaving it,
// given as {NE, NW, SW, SE} boundary darts (darts inside the set).
Tangle extract_tangle(const Diagram& d, const std::vector<CrossingId>& crossings,
                      const std::array<DartId, 4>& boundary);

// Code identifying a tangle up to isomorphism fixing the four ports.
std::vector<int> tangle_code(const Tangle& t);

// PD-style text of the tangle: one X(...) per crossing with edge labels,
// boundary edges labeled by their port names.
std::string tangle_pd(const Tangle& t);

// Standard families.
Diagram torus_2(int m);                      // N(horizontal_twist(m))
Diagram pretzel(const std::vector<int>& columns);  // N(sum of vertical twists)

}  // namespace knotflype
