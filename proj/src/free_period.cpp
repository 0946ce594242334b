#include "knotflype/free_period.hpp"

#include <algorithm>
#include <map>

#include "parallel.hpp"

namespace knotflype {

Diagram construct_free_periodic(const Tangle& tangle, int p, int n) {
  if (!is_odd_prime(p)) {
    throw KnotError(ErrorKind::kInvalidArgument, "p must be an odd prime, got " + std::to_string(p));
  }
  if (tangle.crossing_count() == 0) {
    throw KnotError(ErrorKind::kInvalidArgument, "the repeated tangle must have crossings");
  }
  Tangle chain = tangle;
  for (int i = 1; i < p; ++i) chain = tangle_sum(chain, tangle);
  if (n != 0) chain = tangle_sum(chain, horizontal_twist(2 * n));
  const Diagram d = numerator_closure(chain);
  if (component_count(d) != 1) throw KnotError(ErrorKind::kNotAKnot, "closure is a link");
  if (!validate_alternating(d)) throw KnotError(ErrorKind::kNotAlternating, "closure is not alternating");
  if (!validate_reduced(d)) throw KnotError(ErrorKind::kNotReduced, "closure is not reduced");
  if (!validate_prime(d)) throw KnotError(ErrorKind::kNotPrime, "closure is not prime");
  return d;
}

namespace {

// One summand between two consecutive cuts, listed left to right.
struct Piece {
  std::vector<CrossingId> crossings;
  std::array<DartId, 4> ports;  // NE, NW, SW, SE
};

// Splits d into the cyclic chain of summands between faces top and bottom.
// Empty when the cuts do not decompose d this way.
std::vector<Piece> chain_between(const Diagram& d, const std::vector<std::vector<DartId>>& faces,
                                 const std::map<std::pair<FaceId, FaceId>, std::vector<EdgeId>>& shared,
                                 FaceId top, FaceId bottom) {
  auto edge_between = [&](FaceId a, FaceId b) -> EdgeId {
    const auto it = shared.find({std::min(a, b), std::max(a, b)});
    return it != shared.end() && it->second.size() == 1 ? it->second.front() : -1;
  };
  struct Cut {
    DartId top_dart;     // dart of the top edge on the top face
    DartId bottom_dart;  // dart of the bottom edge on the middle face
  };
  // Walking a face keeps it on the right, so the top face is walked right
  // to left.
  std::vector<Cut> cuts;
  std::vector<FaceId> middles;
  for (const DartId x : faces[top]) {
    const FaceId mid = d.face_of(d.mate(x));
    if (mid == bottom) return {};
    const EdgeId b = edge_between(mid, bottom);
    if (b < 0) continue;
    if (std::find(middles.begin(), middles.end(), mid) != middles.end()) return {};
    middles.push_back(mid);
    cuts.push_back(Cut{x, d.face_of(b) == mid ? b : d.mate(b)});
  }
  const int m = static_cast<int>(cuts.size());
  if (m < 2) return {};
  std::reverse(cuts.begin(), cuts.end());  // now left to right
  std::vector<EdgeId> cut_edges;
  for (const auto& c : cuts) {
    cut_edges.push_back(d.edge_of(c.top_dart));
    cut_edges.push_back(d.edge_of(c.bottom_dart));
  }
  std::vector<int> piece_of(d.crossing_count(), -1);
  std::vector<Piece> pieces(m);
  for (int i = 0; i < m; ++i) {
    // Piece i lies right of cut i. Walking right to left, the top dart of a
    // cut sits on the piece to its left and its mate on the piece to its right.
    const DartId nw = cuts[i].top_dart;
    const DartId ne = d.mate(cuts[(i + 1) % m].top_dart);
    // The bottom dart lies on the middle face; which end is inside is
    // settled after the flood fill.
    const CrossingId start = Diagram::crossing_of(nw);
    if (piece_of[start] >= 0) return {};
    std::vector<CrossingId> stack{start};
    piece_of[start] = i;
    while (!stack.empty()) {
      const CrossingId c = stack.back();
      stack.pop_back();
      pieces[i].crossings.push_back(c);
      for (int k = 0; k < 4; ++k) {
        const DartId x = Diagram::dart(c, k);
        if (std::find(cut_edges.begin(), cut_edges.end(), d.edge_of(x)) != cut_edges.end()) continue;
        const CrossingId t = Diagram::crossing_of(d.mate(x));
        if (piece_of[t] == i) continue;
        if (piece_of[t] >= 0) return {};
        piece_of[t] = i;
        stack.push_back(t);
      }
    }
    std::sort(pieces[i].crossings.begin(), pieces[i].crossings.end());
    pieces[i].ports = {ne, nw, -1, -1};
  }
  if (std::count(piece_of.begin(), piece_of.end(), -1) != 0) return {};
  for (int i = 0; i < m; ++i) {
    const DartId nw = pieces[i].ports[1];
    const DartId ne = pieces[i].ports[0];
    if (piece_of[Diagram::crossing_of(ne)] != i || piece_of[Diagram::crossing_of(nw)] != i) return {};
    auto inside = [&](DartId x) { return piece_of[Diagram::crossing_of(x)] == i ? x : d.mate(x); };
    const DartId sw = inside(cuts[i].bottom_dart);
    const DartId se = inside(cuts[(i + 1) % m].bottom_dart);
    if (piece_of[Diagram::crossing_of(sw)] != i || piece_of[Diagram::crossing_of(se)] != i) return {};
    pieces[i].ports[2] = sw;
    pieces[i].ports[3] = se;
  }
  return pieces;
}

Tangle join_pieces(const Diagram& d, const std::vector<Piece>& pieces, int first, int count) {
  const int m = static_cast<int>(pieces.size());
  std::vector<CrossingId> crossings;
  for (int j = 0; j < count; ++j) {
    const auto& c = pieces[(first + j) % m].crossings;
    crossings.insert(crossings.end(), c.begin(), c.end());
  }
  const Piece& l = pieces[first % m];
  const Piece& r = pieces[(first + count - 1) % m];
  return extract_tangle(d, crossings, {r.ports[0], l.ports[1], l.ports[2], r.ports[3]});
}

}  // namespace

std::optional<FreePeriodReport> find_free_template(const Diagram& d, int p) {
  const auto faces = d.faces();
  std::map<std::pair<FaceId, FaceId>, std::vector<EdgeId>> shared;
  for (DartId x = 0; x < d.dart_count(); ++x) {
    if (x > d.mate(x)) continue;
    const FaceId a = d.face_of(x), b = d.face_of(d.mate(x));
    shared[{std::min(a, b), std::max(a, b)}].push_back(x);
  }
  const auto target = canonical_code(d);
  const auto plus = tangle_code(tangle_crossing(1));
  const auto minus = tangle_code(tangle_crossing(-1));
  std::optional<FreePeriodReport> best;
  for (FaceId top = 0; top < d.face_count(); ++top) {
    for (FaceId bottom = 0; bottom < d.face_count(); ++bottom) {
      if (top == bottom) continue;
      const auto pieces = chain_between(d, faces, shared, top, bottom);
      const int m = static_cast<int>(pieces.size());
      if (m < p) continue;
      std::vector<std::vector<int>> codes;
      for (int i = 0; i < m; ++i) codes.push_back(tangle_code(join_pieces(d, pieces, i, 1)));
      for (int twists = 0; twists <= m - p; twists += 2) {
        if ((m - twists) % p != 0) continue;
        const int k = (m - twists) / p;
        if (best && std::abs(best->twist_count) <= twists / 2) break;
        const int starts = twists == 0 ? k : m;
        for (int s = 0; s < starts; ++s) {
          int sign = 0;
          if (twists > 0) {
            const auto& first = codes[s];
            sign = first == plus ? 1 : first == minus ? -1 : 0;
            bool ok = sign != 0;
            for (int j = 1; j < twists && ok; ++j) ok = codes[(s + j) % m] == first;
            if (!ok) continue;
          }
          const int body = s + twists;
          const Tangle t = join_pieces(d, pieces, body, k);
          const auto t_code = tangle_code(t);
          bool equal = true;
          for (int g = 1; g < p && equal; ++g) {
            equal = tangle_code(join_pieces(d, pieces, body + g * k, k)) == t_code;
          }
          if (!equal) continue;
          const int n = sign * twists / 2;
          try {
            if (canonical_code(construct_free_periodic(t, p, n)) != target) continue;
          } catch (const KnotError&) {
            continue;
          }
          best = FreePeriodReport{p, t, n, d, 0};
          break;
        }
        if (best && best->twist_count == 0) return best;
      }
    }
  }
  return best;
}

FreePeriodResult detect_free_period_in_graph(const FlypeGraph& graph, int p, int jobs) {
  if (!is_odd_prime(p)) {
    throw KnotError(ErrorKind::kInvalidArgument, "p must be an odd prime, got " + std::to_string(p));
  }
  FreePeriodResult result;
  result.nodes = graph.node_count();
  result.edges = graph.edges.size();
  result.complete = graph.complete;
  std::vector<std::optional<FreePeriodReport>> found(graph.node_count());
  detail::parallel_for(graph.node_count(), jobs,
                       [&](std::size_t i) { found[i] = find_free_template(graph.nodes[i], p); });
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (found[i]) {
      result.report = std::move(found[i]);
      result.report->node = i;
      break;
    }
  }
  if (result.report) {
    result.reason = "found";
  } else {
    result.reason = graph.complete ? "no-template" : "inconclusive";
  }
  return result;
}

FreePeriodResult detect_free_period(const Diagram& seed, int p, const AnalysisOptions& options) {
  if (!is_odd_prime(p)) {
    throw KnotError(ErrorKind::kInvalidArgument, "p must be an odd prime, got " + std::to_string(p));
  }
  const FlypeGraph graph = build_flype_graph(seed, options.graph);
  return detect_free_period_in_graph(graph, p, options.graph.jobs);
}

}  // namespace knotflype
