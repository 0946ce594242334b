#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "knotflype/diagram.hpp"

namespace knotflype {

// PD code: whitespace-separated tuples `X(a,b,c,d)`. Each tuple lists the
// four edge labels around one crossing counterclockwise, starting with the
// incoming under-strand; so a->c is the under-strand. Every label must occur
// exactly twice. Labels are discarded after parsing.
Diagram parse_pd(std::string_view text);
// Labels edges 1..2n along knot_path() and writes tuples in crossing order.
std::string export_pd(const Diagram& d);

// DT code: n signed even integers; the i-th entry is paired with the odd
// label 2i-1. A positive entry means the odd label passes under at that
// crossing, a negative one that it passes over; an all-positive code is the
// alternating diagram. Of the two mirror-image embeddings the one whose
// crossing at label 1 is negative is returned.
Diagram parse_dt(const std::vector<int>& code);
// Accepts integers separated by commas and/or whitespace.
std::vector<int> parse_dt_text(std::string_view text);
Diagram parse_dt(std::string_view text);
// Minimal DT code over all starting points and directions, with the sign
// convention of parse_dt. Requires a knot diagram.
std::vector<int> export_dt(const Diagram& d);

// Gauss code: comma-separated tokens `O+k`, `O-k`, `U+k`, `U-k` along the
// knot, where O/U marks passing over/under, the sign is the crossing sign
// and k >= 1 is the crossing label.
struct GaussToken {
  bool over;
  int sign;
  int label;
};
using GaussCode = std::vector<GaussToken>;

// Follows knot_path() and labels crossing c as c+1.
GaussCode export_gauss(const Diagram& d);
std::string format_gauss(const GaussCode& code);
GaussCode parse_gauss_text(std::string_view text);
Diagram parse_gauss(const GaussCode& code);
Diagram parse_gauss(std::string_view text);

// Builds the map of a closed curve from its double-occurrence sequence of
// crossing labels (0-based) and one flat orientation bit per crossing: bit 0
// means the second pass crosses the first from right to left. `first_over`
// says whether the first pass of each crossing is the over-strand. Returns
// nullopt when the map is not planar.
std::optional<Diagram> realize_curve(const std::vector<int>& sequence,
                                     const std::vector<char>& orientation,
                                     const std::vector<char>& first_over);

// Flat orientation bits making the closed curve with this double-occurrence
// sequence planar, or nullopt if there are none. The bit of the crossing
// whose second visit comes first is always 0.
std::optional<std::vector<char>> find_planar_orientation(const std::vector<int>& sequence, int n);

}  // namespace knotflype
