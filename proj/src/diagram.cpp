#include "knotflype/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace knotflype {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedCode: return "MalformedCode";
    case ErrorKind::kNotFourValent: return "NotFourValent";
    case ErrorKind::kNonPlanar: return "NonPlanar";
    case ErrorKind::kDisconnected: return "Disconnected";
    case ErrorKind::kUnrealizable: return "Unrealizable";
    case ErrorKind::kNotReduced: return "NotReduced";
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kNotAlternating: return "NotAlternating";
    case ErrorKind::kNotAKnot: return "NotAKnot";
    case ErrorKind::kInvalidDiagram: return "InvalidDiagram";
    case ErrorKind::kInvalidSite: return "InvalidSite";
    case ErrorKind::kInvalidReport: return "InvalidReport";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kConfigurationA: return "ConfigurationA";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kLimitExceeded: return "LimitExceeded";
    case ErrorKind::kIo: return "IoError";
  }
  return "Unknown";
}

Diagram::Diagram(std::vector<DartId> mates, std::vector<std::uint8_t> over_pairs)
    : mates_(std::move(mates)), over_pairs_(std::move(over_pairs)) {
  const int n = crossing_count();
  if (n == 0) throw KnotError(ErrorKind::kUnrealizable, "diagram has no crossings");
  if (dart_count() != 4 * n) {
    throw KnotError(ErrorKind::kMalformedCode, "dart count must be four per crossing");
  }
  for (auto& o : over_pairs_) {
    if (o > 1) throw KnotError(ErrorKind::kMalformedCode, "over pair must be 0 or 1");
  }
  for (DartId d = 0; d < dart_count(); ++d) {
    const DartId m = mates_[d];
    if (m < 0 || m >= dart_count() || m == d || mates_[m] != d) {
      throw KnotError(ErrorKind::kNotFourValent,
                      "edge involution is not a fixed-point-free involution at dart " +
                          std::to_string(d));
    }
  }

  std::vector<char> seen(n, 0);
  std::vector<CrossingId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const CrossingId c = stack.back();
    stack.pop_back();
    for (int k = 0; k < 4; ++k) {
      const CrossingId t = crossing_of(mates_[dart(c, k)]);
      if (!seen[t]) {
        seen[t] = 1;
        ++reached;
        stack.push_back(t);
      }
    }
  }
  if (reached != n) throw KnotError(ErrorKind::kDisconnected, "diagram is disconnected");

  face_of_.assign(dart_count(), -1);
  for (DartId d = 0; d < dart_count(); ++d) {
    if (face_of_[d] >= 0) continue;
    const FaceId f = static_cast<FaceId>(face_starts_.size());
    face_starts_.push_back(d);
    DartId x = d;
    do {
      face_of_[x] = f;
      x = next_ccw(mates_[x]);
    } while (x != d);
  }
  if (face_count() != n + 2) {
    throw KnotError(ErrorKind::kNonPlanar, "face count " + std::to_string(face_count()) +
                                               " differs from crossings + 2 = " +
                                               std::to_string(n + 2));
  }
}

std::vector<DartId> Diagram::face_darts(FaceId f) const {
  std::vector<DartId> out;
  const DartId start = face_starts_[f];
  DartId x = start;
  do {
    out.push_back(x);
    x = next_ccw(mates_[x]);
  } while (x != start);
  return out;
}

std::vector<std::vector<DartId>> Diagram::faces() const {
  std::vector<std::vector<DartId>> out;
  out.reserve(face_count());
  for (FaceId f = 0; f < face_count(); ++f) out.push_back(face_darts(f));
  return out;
}

Verdict validate_alternating(const Diagram& d) {
  for (DartId x = 0; x < d.dart_count(); ++x) {
    const DartId y = d.mate(x);
    if (x < y && d.is_over(x) == d.is_over(y)) return {false, {d.edge_of(x)}};
  }
  return {};
}

Verdict validate_reduced(const Diagram& d) {
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    if (d.corner_face(c, 0) == d.corner_face(c, 2) || d.corner_face(c, 1) == d.corner_face(c, 3)) {
      return {false, {c}};
    }
  }
  return {};
}

namespace {

// Crossings reachable from `start` without using the two given edges.
std::vector<char> reach_avoiding(const Diagram& d, CrossingId start, EdgeId e1, EdgeId e2) {
  std::vector<char> seen(d.crossing_count(), 0);
  std::vector<CrossingId> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const CrossingId c = stack.back();
    stack.pop_back();
    for (int k = 0; k < 4; ++k) {
      const DartId x = Diagram::dart(c, k);
      const EdgeId e = d.edge_of(x);
      if (e == e1 || e == e2) continue;
      const CrossingId t = Diagram::crossing_of(d.mate(x));
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

}  // namespace

Verdict validate_prime(const Diagram& d) {
  // Edges are grouped by the unordered pair of faces they separate.
  std::map<std::pair<FaceId, FaceId>, std::vector<EdgeId>> by_faces;
  for (DartId x = 0; x < d.dart_count(); ++x) {
    const DartId y = d.mate(x);
    if (x > y) continue;
    FaceId a = d.face_of(x), b = d.face_of(y);
    if (a > b) std::swap(a, b);
    by_faces[{a, b}].push_back(x);
  }
  for (const auto& [faces, edges] : by_faces) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const EdgeId e1 = edges[i], e2 = edges[j];
        const auto side = reach_avoiding(d, Diagram::crossing_of(e1), e1, e2);
        const int count = static_cast<int>(std::count(side.begin(), side.end(), 1));
        if (count < d.crossing_count()) return {false, {e1, e2}};
      }
    }
  }
  return {};
}

void require_reduced_prime_alternating(const Diagram& d) {
  if (!validate_alternating(d)) throw KnotError(ErrorKind::kInvalidDiagram, "diagram is not alternating");
  if (!validate_reduced(d)) throw KnotError(ErrorKind::kInvalidDiagram, "diagram is not reduced");
  if (!validate_prime(d)) throw KnotError(ErrorKind::kInvalidDiagram, "diagram is not prime");
}

int component_count(const Diagram& d) {
  std::vector<char> used(d.dart_count(), 0);
  int components = 0;
  for (DartId start = 0; start < d.dart_count(); ++start) {
    if (used[start]) continue;
    ++components;
    DartId out = start;
    do {
      used[out] = 1;
      const DartId in = d.mate(out);
      used[in] = 1;
      out = Diagram::straight(in);
    } while (out != start);
  }
  return components;
}

std::vector<DartId> knot_path(const Diagram& d) {
  std::vector<DartId> path;
  DartId out = 0;
  do {
    path.push_back(out);
    out = Diagram::straight(d.mate(out));
  } while (out != 0);
  return path;
}

std::vector<int> crossing_signs(const Diagram& d) {
  const int n = d.crossing_count();
  std::vector<int> over_out(n, -1), under_out(n, -1);
  for (const DartId out : knot_path(d)) {
    const CrossingId c = Diagram::crossing_of(out);
    (d.is_over(out) ? over_out : under_out)[c] = Diagram::slot(out);
  }
  std::vector<int> signs(n, 0);
  for (CrossingId c = 0; c < n; ++c) {
    if (over_out[c] < 0 || under_out[c] < 0) {
      throw KnotError(ErrorKind::kNotAKnot, "crossing signs need a one-component diagram");
    }
    signs[c] = under_out[c] == (over_out[c] + 1) % 4 ? 1 : -1;
  }
  return signs;
}

Diagram toggle_all(const Diagram& d) {
  auto over = d.over_pairs();
  for (auto& o : over) o ^= 1;
  return Diagram(d.mates(), std::move(over));
}

namespace {
DartId mirrored(DartId x) { return (x & ~3) | ((4 - (x & 3)) & 3); }
}  // namespace

Diagram reflect(const Diagram& d) {
  std::vector<DartId> mates(d.dart_count());
  for (DartId x = 0; x < d.dart_count(); ++x) mates[mirrored(x)] = mirrored(d.mate(x));
  // Slot j moves to -j, which keeps parity, so over pairs are unchanged.
  return Diagram(std::move(mates), d.over_pairs());
}

Diagram turn_over(const Diagram& d) { return toggle_all(reflect(d)); }

std::optional<Diagram> remove_curls(const Diagram& input) {
  std::vector<DartId> mates = input.mates();
  std::vector<std::uint8_t> over = input.over_pairs();
  for (;;) {
    const int n = static_cast<int>(over.size());
    // A curl is a crossing with an edge joining two of its adjacent darts.
    CrossingId curl = -1;
    int loop_slot = -1;
    for (CrossingId c = 0; c < n && curl < 0; ++c) {
      for (int k = 0; k < 4; ++k) {
        if (mates[4 * c + k] == 4 * c + (k + 1) % 4) {
          curl = c;
          loop_slot = k;
          break;
        }
      }
    }
    if (curl < 0) break;
    if (n == 1) return std::nullopt;
    // The loop uses slots k and k+1; the strand continues from slot k+2 to k+3.
    const DartId a = mates[4 * curl + (loop_slot + 2) % 4];
    const DartId b = mates[4 * curl + (loop_slot + 3) % 4];
    if (Diagram::crossing_of(a) == curl) return std::nullopt;  // figure-eight curve of one crossing
    mates[a] = b;
    mates[b] = a;
    // Move the last crossing into the freed slot.
    const CrossingId last = n - 1;
    if (curl != last) {
      for (int k = 0; k < 4; ++k) {
        const DartId from = 4 * last + k;
        const DartId to = 4 * curl + k;
        DartId m = mates[from];
        if (Diagram::crossing_of(m) == last) m = 4 * curl + Diagram::slot(m);
        mates[to] = m;
        mates[m] = to;
      }
      over[curl] = over[last];
    }
    mates.resize(4 * last);
    over.resize(last);
  }
  return Diagram(std::move(mates), std::move(over));
}

}  // namespace knotflype
