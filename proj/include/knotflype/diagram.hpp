#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotflype {

using DartId = std::int32_t;
using CrossingId = std::int32_t;
using FaceId = std::int32_t;

// An edge is named by the smaller of its two darts.
using EdgeId = std::int32_t;

enum class ErrorKind {
  kMalformedCode,
  kNotFourValent,
  kNonPlanar,
  kDisconnected,
  kUnrealizable,
  kNotReduced,
  kNotPrime,
  kNotAlternating,
  kNotAKnot,
  kInvalidDiagram,
  kInvalidSite,
  kInvalidReport,
  kInvalidArgument,
  kConfigurationA,
  kTooLarge,
  kLimitExceeded,
  kIo,
};

const char* error_kind_name(ErrorKind kind);

class KnotError : public std::runtime_error {
 public:
  KnotError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// A knot diagram stored as a combinatorial map on the sphere.
//
// Crossing c owns darts 4c..4c+3 listed counterclockwise. Darts 4c+j and
// 4c+(j+2)%4 are the two ends of one strand passing straight through c.
// over_pair(c) is 0 when darts {0,2} carry the over-strand and 1 when darts
// {1,3} do. mate() is the edge involution: it pairs the two darts at the ends
// of one edge.
//
// Faces are the orbits of d -> next_ccw(mate(d)). The corner between darts
// d and next_ccw(d) lies in face_of(next_ccw(d)).
//
// Construction validates the involution, connectivity and the sphere Euler
// relation F = V + 2. Values are immutable afterwards.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::vector<DartId> mates, std::vector<std::uint8_t> over_pairs);

  int crossing_count() const { return static_cast<int>(over_pairs_.size()); }
  int dart_count() const { return static_cast<int>(mates_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int face_count() const { return static_cast<int>(face_starts_.size()); }

  DartId mate(DartId d) const { return mates_[d]; }
  const std::vector<DartId>& mates() const { return mates_; }
  const std::vector<std::uint8_t>& over_pairs() const { return over_pairs_; }
  int over_pair(CrossingId c) const { return over_pairs_[c]; }
  bool is_over(DartId d) const { return (slot(d) & 1) == over_pairs_[crossing_of(d)]; }

  static CrossingId crossing_of(DartId d) { return d >> 2; }
  static int slot(DartId d) { return d & 3; }
  static DartId dart(CrossingId c, int slot) { return 4 * c + (slot & 3); }
  static DartId next_ccw(DartId d) { return (d & ~3) | ((d + 1) & 3); }
  static DartId prev_ccw(DartId d) { return (d & ~3) | ((d + 3) & 3); }
  static DartId straight(DartId d) { return d ^ 2; }
  EdgeId edge_of(DartId d) const { return d < mates_[d] ? d : mates_[d]; }

  FaceId face_of(DartId d) const { return face_of_[d]; }
  // Face containing the corner between slot k and slot k+1 at crossing c.
  FaceId corner_face(CrossingId c, int k) const { return face_of_[dart(c, k + 1)]; }
  // Darts of each face in traversal order.
  std::vector<std::vector<DartId>> faces() const;
  std::vector<DartId> face_darts(FaceId f) const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.mates_ == b.mates_ && a.over_pairs_ == b.over_pairs_;
  }

 private:
  std::vector<DartId> mates_;
  std::vector<std::uint8_t> over_pairs_;
  std::vector<FaceId> face_of_;
  std::vector<DartId> face_starts_;
};

// A verdict with an optional witness; the witness meaning is per check.
struct Verdict {
  bool ok = true;
  std::vector<int> witness;
  explicit operator bool() const { return ok; }
};

// Every edge joins an over-end to an under-end. Witness: the offending edge.
Verdict validate_alternating(const Diagram& d);
// No crossing has two equal corner faces. Witness: the nugatory crossing.
Verdict validate_reduced(const Diagram& d);
// No two edges sharing both of their faces split the crossings into two
// non-empty sides. Witness: the two cut edges.
Verdict validate_prime(const Diagram& d);

// Throws KnotError(kInvalidDiagram) unless d is reduced, prime and alternating.
void require_reduced_prime_alternating(const Diagram& d);

// Number of closed strands (1 for a knot).
int component_count(const Diagram& d);

// The knot traversal: exit darts in order, starting with dart 0 leaving
// crossing 0. Only meaningful for one-component diagrams.
std::vector<DartId> knot_path(const Diagram& d);

// Crossing signs under the traversal orientation of knot_path().
std::vector<int> crossing_signs(const Diagram& d);

// Diagram with every crossing's over/under exchanged.
Diagram toggle_all(const Diagram& d);
// Diagram with the sphere orientation reversed (labels kept): the mirror knot.
Diagram reflect(const Diagram& d);
// Reflected and toggled: the same knot seen from the other side of the sphere.
Diagram turn_over(const Diagram& d);

// Removes Reidemeister-I curls until none remain. Never applied implicitly.
// Returns nullopt when the diagram reduces to zero crossings (the unknot).
std::optional<Diagram> remove_curls(const Diagram& d);

}  // namespace knotflype
