#include "knotflype/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "knotflype/tangle.hpp"
#include "parallel.hpp"

namespace knotflype {

Symmetry make_symmetry(const Diagram& d, std::vector<DartId> dart_map, bool orientation_preserving) {
  Symmetry s;
  s.orientation_preserving = orientation_preserving;
  std::vector<char> seen(dart_map.size(), 0);
  long order = 1;
  for (DartId x = 0; x < static_cast<DartId>(dart_map.size()); ++x) {
    if (seen[x]) continue;
    long len = 0;
    for (DartId y = x; !seen[y]; y = dart_map[y]) {
      seen[y] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  s.order = static_cast<int>(order);
  for (FaceId f = 0; f < d.face_count(); ++f) {
    const DartId z = d.face_darts(f).front();
    // The corner before z lies in f. A reversing map sends it to the corner
    // before the image of prev_ccw(z).
    const FaceId g = d.face_of(orientation_preserving ? dart_map[z] : dart_map[Diagram::prev_ccw(z)]);
    if (g == f) s.fixed_faces.push_back(f);
  }
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    if (Diagram::crossing_of(dart_map[4 * c]) == c) s.fixed_crossings.push_back(c);
  }
  for (DartId x = 0; x < d.dart_count(); ++x) {
    if (d.edge_of(x) == x && d.edge_of(dart_map[x]) == x) s.fixed_edges.push_back(x);
  }
  s.dart_map = std::move(dart_map);
  return s;
}

Symmetry identity_symmetry(const Diagram& d) {
  std::vector<DartId> id(d.dart_count());
  std::iota(id.begin(), id.end(), 0);
  return make_symmetry(d, std::move(id), true);
}

std::vector<Symmetry> automorphisms(const Diagram& d) {
  std::vector<Symmetry> out;
  for (const bool reversing : {false, true}) {
    for (DartId y = 0; y < d.dart_count(); ++y) {
      if (auto map = extend_dart_map(d, d, y, reversing, false)) {
        out.push_back(make_symmetry(d, std::move(*map), !reversing));
      }
    }
  }
  return out;
}

std::string cycle_notation(const std::vector<DartId>& perm) {
  std::ostringstream out;
  std::vector<char> seen(perm.size(), 0);
  bool any = false;
  for (DartId x = 0; x < static_cast<DartId>(perm.size()); ++x) {
    if (seen[x] || perm[x] == x) continue;
    any = true;
    out << '(';
    for (DartId y = x; !seen[y]; y = perm[y]) {
      seen[y] = 1;
      if (y != x) out << ' ';
      out << y;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int q = 3; q * q <= p; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

std::optional<Symmetry> find_period_symmetry(const Diagram& d, int p) {
  if (d.crossing_count() % p != 0) return std::nullopt;
  for (DartId y = 0; y < d.dart_count(); ++y) {
    auto map = extend_dart_map(d, d, y, false, false);
    if (!map) continue;
    Symmetry s = make_symmetry(d, std::move(*map), true);
    if (s.order == p && s.fixed_faces.size() == 2 && s.fixed_crossings.empty() && s.fixed_edges.empty()) {
      return s;
    }
  }
  return std::nullopt;
}

std::optional<int> torus_pattern(const Diagram& d) {
  const int n = d.crossing_count();
  const auto code = canonical_code(d);
  for (const int m : {n, -n}) {
    if (canonical_code(torus_2(m)) == code) return m;
  }
  return std::nullopt;
}

namespace {

void require_odd_prime(int p) {
  if (!is_odd_prime(p)) {
    throw KnotError(ErrorKind::kInvalidArgument, "p must be an odd prime, got " + std::to_string(p));
  }
}

}  // namespace

PeriodResult detect_period_in_graph(const FlypeGraph& graph, int p, bool all_witnesses, int jobs) {
  require_odd_prime(p);
  PeriodResult result;
  result.nodes = graph.node_count();
  result.edges = graph.edges.size();
  result.complete = graph.complete;
  std::vector<std::optional<Symmetry>> found(graph.node_count());
  detail::parallel_for(graph.node_count(), jobs,
                       [&](std::size_t i) { found[i] = find_period_symmetry(graph.nodes[i], p); });
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (!found[i]) continue;
    PeriodReport r{p, graph.nodes[i], std::move(*found[i]), i};
    if (!result.report) result.report = r;
    if (!all_witnesses) break;
    result.witnesses.push_back(std::move(r));
  }
  if (result.report) {
    result.reason = "found";
  } else {
    result.reason = graph.complete ? "no-symmetry" : "inconclusive";
  }
  return result;
}

PeriodResult detect_period(const Diagram& seed, int p, const AnalysisOptions& options) {
  require_odd_prime(p);
  require_reduced_prime_alternating(seed);
  if (options.shortcuts) {
    if (seed.crossing_count() % p != 0) {
      PeriodResult r;
      r.reason = "divisibility";
      return r;
    }
    if (torus_pattern(seed)) {
      // The (2, m) torus knot has a single reduced alternating diagram.
      PeriodResult r;
      Diagram d = canonical_form(seed, CanonOptions{options.graph.mirror});
      r.nodes = 1;
      if (auto s = find_period_symmetry(d, p)) {
        r.report = PeriodReport{p, d, std::move(*s), 0};
        if (options.all_witnesses) r.witnesses.push_back(*r.report);
        r.reason = "torus";
      } else {
        r.reason = "no-symmetry";
      }
      return r;
    }
  }
  const FlypeGraph graph = build_flype_graph(seed, options.graph);
  return detect_period_in_graph(graph, p, options.all_witnesses, options.graph.jobs);
}

Diagram quotient(const PeriodReport& report) {
  const Diagram& d = report.diagram;
  const Symmetry& s = report.symmetry;
  const int n = d.crossing_count();
  if (static_cast<int>(s.dart_map.size()) != d.dart_count() || !s.orientation_preserving) {
    throw KnotError(ErrorKind::kInvalidReport, "symmetry does not act on this diagram by rotation");
  }
  const auto check = extend_dart_map(d, d, s.dart_map[0], false, false);
  if (!check || *check != s.dart_map) {
    throw KnotError(ErrorKind::kInvalidReport, "dart map is not an automorphism of the diagram");
  }
  const int order = s.order;
  for (DartId x = 0; x < d.dart_count(); ++x) {
    DartId y = x;
    for (int k = 1; k < order; ++k) {
      y = s.dart_map[y];
      if (y == x) throw KnotError(ErrorKind::kInvalidReport, "symmetry does not act freely on darts");
    }
  }
  if (n % order != 0) throw KnotError(ErrorKind::kInvalidReport, "crossing count not divisible by the order");

  // orbit[c] and shift[c]: dart (rep, j) is carried to (c, j + shift[c]).
  std::vector<int> orbit(n, -1), shift(n, 0);
  std::vector<CrossingId> reps;
  for (CrossingId r = 0; r < n; ++r) {
    if (orbit[r] >= 0) continue;
    const int o = static_cast<int>(reps.size());
    reps.push_back(r);
    DartId x = Diagram::dart(r, 0);
    for (int k = 0; k < order; ++k) {
      orbit[Diagram::crossing_of(x)] = o;
      shift[Diagram::crossing_of(x)] = Diagram::slot(x);
      x = s.dart_map[x];
    }
  }
  const int m = static_cast<int>(reps.size());
  auto image = [&](DartId x) {
    const CrossingId c = Diagram::crossing_of(x);
    return Diagram::dart(orbit[c], Diagram::slot(x) - shift[c]);
  };
  std::vector<DartId> mates(4 * m);
  std::vector<std::uint8_t> over(m);
  for (int o = 0; o < m; ++o) {
    over[o] = static_cast<std::uint8_t>(d.over_pair(reps[o]));
    for (int j = 0; j < 4; ++j) mates[4 * o + j] = image(d.mate(Diagram::dart(reps[o], j)));
  }
  Diagram q(std::move(mates), std::move(over));
  if (!validate_alternating(q)) throw std::logic_error("quotient diagram is not alternating");
  return q;
}

}  // namespace knotflype
