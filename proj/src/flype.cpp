#include "knotflype/flype.hpp"

#include <algorithm>

#include "knotflype/canonical.hpp"

namespace knotflype {

namespace {

// Crossings reachable from the given darts' far ends, never entering
// `blocked` and never crossing the two cut edges.
std::vector<char> flood(const Diagram& d, CrossingId blocked, std::initializer_list<DartId> starts,
                        EdgeId cut1, EdgeId cut2) {
  std::vector<char> in(d.crossing_count(), 0);
  std::vector<CrossingId> stack;
  for (const DartId s : starts) {
    const CrossingId t = Diagram::crossing_of(d.mate(s));
    if (t != blocked && !in[t]) {
      in[t] = 1;
      stack.push_back(t);
    }
  }
  while (!stack.empty()) {
    const CrossingId c = stack.back();
    stack.pop_back();
    for (int k = 0; k < 4; ++k) {
      const DartId x = Diagram::dart(c, k);
      const EdgeId e = d.edge_of(x);
      if (e == cut1 || e == cut2) continue;
      const CrossingId t = Diagram::crossing_of(d.mate(x));
      if (t == blocked || in[t]) continue;
      in[t] = 1;
      stack.push_back(t);
    }
  }
  return in;
}

// Checks the cut for crossing c split at slot k with edges e1, e2 and
// returns the domain, or an empty vector if the cut is not a flype circle.
std::vector<CrossingId> cut_domain(const Diagram& d, CrossingId c, int k, EdgeId e1, EdgeId e2) {
  const int n = d.crossing_count();
  if (e1 == e2) return {};
  for (const EdgeId e : {e1, e2}) {
    if (Diagram::crossing_of(e) == c || Diagram::crossing_of(d.mate(e)) == c) return {};
  }
  const DartId p = Diagram::dart(c, k), q = Diagram::dart(c, k + 1);
  const DartId r = Diagram::dart(c, k + 2), s = Diagram::dart(c, k + 3);
  const auto in = flood(d, c, {p, q}, e1, e2);
  if (in[Diagram::crossing_of(d.mate(r))] || in[Diagram::crossing_of(d.mate(s))]) return {};
  for (const EdgeId e : {e1, e2}) {
    if (in[Diagram::crossing_of(e)] == in[Diagram::crossing_of(d.mate(e))]) return {};
  }
  const auto out = flood(d, c, {r, s}, e1, e2);
  std::vector<CrossingId> domain;
  int outside = 0;
  for (CrossingId x = 0; x < n; ++x) {
    if (x == c) continue;
    if (in[x]) {
      domain.push_back(x);
    } else if (out[x]) {
      ++outside;
    } else {
      return {};  // neither side is connected
    }
  }
  if (domain.empty() || outside == 0) return {};
  return domain;
}

// Orders the target edges so the first touches the face after slot k+1.
bool faces_match(const Diagram& d, CrossingId c, int k, EdgeId e1, EdgeId e2) {
  const FaceId f1 = d.corner_face(c, k + 1), f3 = d.corner_face(c, k + 3);
  auto touches = [&](EdgeId e, FaceId f) { return d.face_of(e) == f || d.face_of(d.mate(e)) == f; };
  auto other = [&](EdgeId e, FaceId f) { return d.face_of(e) == f ? d.face_of(d.mate(e)) : d.face_of(e); };
  return touches(e1, f1) && touches(e2, f3) && other(e1, f1) == other(e2, f3);
}

void sort_unique(std::vector<FlypeSite>& sites) {
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
}

}  // namespace

std::vector<FlypeSite> find_flype_sites(const Diagram& d, SiteOptions options) {
  require_reduced_prime_alternating(d);
  std::vector<FlypeSite> sites;
  const auto faces = d.faces();
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    for (int k = 0; k < 4; ++k) {
      const FaceId f1 = d.corner_face(c, k + 1), f3 = d.corner_face(c, k + 3);
      for (const DartId a : faces[f1]) {
        const EdgeId e1 = d.edge_of(a);
        const FaceId f2 = d.face_of(d.mate(a));
        for (const DartId b : faces[f3]) {
          if (d.face_of(d.mate(b)) != f2) continue;
          const EdgeId e2 = d.edge_of(b);
          auto domain = cut_domain(d, c, k, e1, e2);
          if (domain.empty()) continue;
          sites.push_back(FlypeSite{c, k, {e1, e2}, std::move(domain)});
        }
      }
    }
  }
  sort_unique(sites);
  if (options.nontrivial_only) {
    const auto code = canonical_code(d);
    std::erase_if(sites, [&](const FlypeSite& s) {
      return canonical_code(apply_flype(d, s).diagram) == code;
    });
  }
  return sites;
}

std::vector<FlypeSite> find_flype_sites_exhaustive(const Diagram& d) {
  require_reduced_prime_alternating(d);
  std::vector<FlypeSite> sites;
  std::vector<EdgeId> edges;
  for (DartId x = 0; x < d.dart_count(); ++x) {
    if (x < d.mate(x)) edges.push_back(x);
  }
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    for (int k = 0; k < 4; ++k) {
      for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
          EdgeId e1 = edges[i], e2 = edges[j];
          auto domain = cut_domain(d, c, k, e1, e2);
          if (domain.empty()) continue;
          // Order the pair by the faces; a cut matching neither order is
          // still reported so that disagreements with the facial search show.
          if (!faces_match(d, c, k, e1, e2) && faces_match(d, c, k, e2, e1)) std::swap(e1, e2);
          sites.push_back(FlypeSite{c, k, {e1, e2}, std::move(domain)});
        }
      }
    }
  }
  sort_unique(sites);
  return sites;
}

bool is_valid_site(const Diagram& d, const FlypeSite& s) {
  if (s.crossing < 0 || s.crossing >= d.crossing_count() || s.entry_slot < 0 || s.entry_slot > 3) {
    return false;
  }
  for (const EdgeId e : s.target_edges) {
    if (e < 0 || e >= d.dart_count() || d.edge_of(e) != e) return false;
  }
  if (!faces_match(d, s.crossing, s.entry_slot, s.target_edges[0], s.target_edges[1])) return false;
  return cut_domain(d, s.crossing, s.entry_slot, s.target_edges[0], s.target_edges[1]) == s.domain;
}

FlypeResult apply_flype(const Diagram& d, const FlypeSite& s) {
  if (!is_valid_site(d, s)) throw KnotError(ErrorKind::kInvalidSite, "not a flype site of this diagram");
  const int n = d.crossing_count();
  const CrossingId c = s.crossing;
  const int k = s.entry_slot;
  std::vector<char> in(n, 0);
  for (const CrossingId x : s.domain) in[x] = 1;

  // Darts inside the domain move to the mirrored slot.
  auto moved = [&](DartId x) {
    return in[Diagram::crossing_of(x)] ? (x & ~3) | ((4 - (x & 3)) & 3) : x;
  };
  const DartId p = Diagram::dart(c, k), q = Diagram::dart(c, k + 1);
  const DartId r = Diagram::dart(c, k + 2), s3 = Diagram::dart(c, k + 3);
  const DartId p_in = d.mate(p), q_in = d.mate(q), r_out = d.mate(r), s_out = d.mate(s3);
  DartId x1 = s.target_edges[0], y1 = d.mate(x1);
  if (!in[Diagram::crossing_of(x1)]) std::swap(x1, y1);
  DartId x2 = s.target_edges[1], y2 = d.mate(x2);
  if (!in[Diagram::crossing_of(x2)]) std::swap(x2, y2);

  std::vector<DartId> mates(4 * n, -1);
  std::vector<std::uint8_t> over = d.over_pairs();
  auto join = [&](DartId a, DartId b) {
    mates[a] = b;
    mates[b] = a;
  };
  for (DartId x = 0; x < 4 * n; ++x) {
    const DartId y = d.mate(x);
    if (Diagram::crossing_of(x) == c || Diagram::crossing_of(y) == c) continue;
    if (d.edge_of(x) == s.target_edges[0] || d.edge_of(x) == s.target_edges[1]) continue;
    mates[moved(x)] = moved(y);
  }
  for (const CrossingId x : s.domain) over[x] ^= 1;
  join(moved(p_in), r_out);
  join(moved(q_in), s_out);
  join(Diagram::dart(c, 0), y1);
  join(Diagram::dart(c, 1), moved(x2));
  join(Diagram::dart(c, 2), moved(x1));
  join(Diagram::dart(c, 3), y2);
  over[c] = d.is_over(x1) ? 0 : 1;
  Diagram out(std::move(mates), std::move(over));
  if (!validate_alternating(out)) {
    throw KnotError(ErrorKind::kInvalidSite, "flype result is not alternating");
  }
  return FlypeResult{std::move(out), c};
}

}  // namespace knotflype
