#include "knotflype/tangle.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace knotflype {

namespace {

struct PortRef {
  int part;
  int port;
};

// Glues tangles along pairs of ports. `outer` names the ports of the result
// (empty for a closed diagram). Chains of port-to-port arcs are followed
// through to real darts.
struct Assembly {
  std::vector<DartId> mates;
  std::vector<std::uint8_t> over_pairs;
};

Assembly assemble(const std::vector<const Tangle*>& parts,
                  const std::vector<std::pair<PortRef, PortRef>>& glue,
                  const std::vector<PortRef>& outer) {
  // Node ids: internal darts first, then every part port, then outer ports.
  std::vector<int> dart_base(parts.size()), port_base(parts.size());
  int darts = 0;
  Assembly out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    dart_base[i] = darts;
    darts += 4 * parts[i]->crossing_count();
    out.over_pairs.insert(out.over_pairs.end(), parts[i]->over_pairs.begin(),
                          parts[i]->over_pairs.end());
  }
  int nodes = darts;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    port_base[i] = nodes;
    nodes += 4;
  }
  const int outer_base = nodes;
  nodes += static_cast<int>(outer.size());

  auto node_of = [&](int part, DartId x) {
    const Tangle& t = *parts[part];
    const int n4 = 4 * t.crossing_count();
    return x < n4 ? dart_base[part] + x : port_base[part] + (x - n4);
  };
  std::vector<std::array<int, 2>> adj(nodes, {-1, -1});
  auto link = [&](int a, int b) {
    (adj[a][0] < 0 ? adj[a][0] : adj[a][1]) = b;
  };
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Tangle& t = *parts[i];
    for (DartId x = 0; x < static_cast<DartId>(t.mates.size()); ++x) {
      link(node_of(static_cast<int>(i), x), node_of(static_cast<int>(i), t.mates[x]));
    }
  }
  for (const auto& [a, b] : glue) {
    const int na = port_base[a.part] + a.port, nb = port_base[b.part] + b.port;
    link(na, nb);
    link(nb, na);
  }
  for (std::size_t k = 0; k < outer.size(); ++k) {
    const int np = port_base[outer[k].part] + outer[k].port;
    link(outer_base + static_cast<int>(k), np);
    link(np, outer_base + static_cast<int>(k));
  }
  for (int v = 0; v < nodes; ++v) {
    const bool is_port = v >= darts && v < outer_base;
    if (adj[v][0] < 0 || (is_port && adj[v][1] < 0)) {
      throw KnotError(ErrorKind::kInvalidArgument, "tangle port left unconnected");
    }
  }

  const int n_out = darts + static_cast<int>(outer.size());
  out.mates.assign(n_out, -1);
  std::vector<char> visited(nodes, 0);
  auto end_index = [&](int v) { return v < darts ? v : darts + (v - outer_base); };
  for (int v = 0; v < nodes; ++v) {
    const bool endpoint = v < darts || v >= outer_base;
    if (!endpoint || visited[v]) continue;
    int prev = v, cur = adj[v][0];
    visited[v] = 1;
    while (cur >= darts && cur < outer_base) {
      visited[cur] = 1;
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    visited[cur] = 1;
    out.mates[end_index(v)] = end_index(cur);
    out.mates[end_index(cur)] = end_index(v);
  }
  for (int v = darts; v < outer_base; ++v) {
    if (!visited[v]) throw KnotError(ErrorKind::kInvalidArgument, "closing the tangle leaves a crossingless circle");
  }
  return out;
}

Tangle to_tangle(Assembly a) { return Tangle{std::move(a.mates), std::move(a.over_pairs)}; }

Diagram to_diagram(Assembly a) {
  if (a.over_pairs.empty()) throw KnotError(ErrorKind::kInvalidArgument, "closure has no crossings");
  return Diagram(std::move(a.mates), std::move(a.over_pairs));
}

}  // namespace

Tangle tangle_crossing(int sign) {
  Tangle t;
  t.mates = {4, 5, 6, 7, 0, 1, 2, 3};
  t.over_pairs = {static_cast<std::uint8_t>(sign > 0 ? 1 : 0)};
  return t;
}

Tangle tangle_zero() { return Tangle{{1, 0, 3, 2}, {}}; }
Tangle tangle_infinity() { return Tangle{{3, 2, 1, 0}, {}}; }

Tangle tangle_sum(const Tangle& a, const Tangle& b) {
  return to_tangle(assemble({&a, &b}, {{{0, Tangle::kNE}, {1, Tangle::kNW}}, {{0, Tangle::kSE}, {1, Tangle::kSW}}},
                            {{1, Tangle::kNE}, {0, Tangle::kNW}, {0, Tangle::kSW}, {1, Tangle::kSE}}));
}

Tangle tangle_product(const Tangle& a, const Tangle& b) {
  return to_tangle(assemble({&a, &b}, {{{0, Tangle::kSW}, {1, Tangle::kNW}}, {{0, Tangle::kSE}, {1, Tangle::kNE}}},
                            {{0, Tangle::kNE}, {0, Tangle::kNW}, {1, Tangle::kSW}, {1, Tangle::kSE}}));
}

Tangle tangle_rotate(const Tangle& t) {
  return to_tangle(assemble({&t}, {}, {{0, 3}, {0, 0}, {0, 1}, {0, 2}}));
}

Tangle horizontal_twist(int m) {
  if (m == 0) return tangle_zero();
  Tangle t = tangle_crossing(m);
  for (int i = 1; i < std::abs(m); ++i) t = tangle_sum(t, tangle_crossing(m));
  return t;
}

Tangle vertical_twist(int m) {
  if (m == 0) return tangle_infinity();
  Tangle t = tangle_crossing(m);
  for (int i = 1; i < std::abs(m); ++i) t = tangle_product(t, tangle_crossing(m));
  return t;
}

Diagram numerator_closure(const Tangle& t) {
  return to_diagram(assemble({&t}, {{{0, Tangle::kNW}, {0, Tangle::kNE}}, {{0, Tangle::kSW}, {0, Tangle::kSE}}}, {}));
}

Diagram denominator_closure(const Tangle& t) {
  return to_diagram(assemble({&t}, {{{0, Tangle::kNW}, {0, Tangle::kSW}}, {{0, Tangle::kNE}, {0, Tangle::kSE}}}, {}));
}

Tangle extract_tangle(const Diagram& d, const std::vector<CrossingId>& crossings,
                      const std::array<DartId, 4>& boundary) {
  const int n = static_cast<int>(crossings.size());
  std::vector<int> local(d.crossing_count(), -1);
  for (int i = 0; i < n; ++i) local[crossings[i]] = i;
  auto map_dart = [&](DartId x) { return 4 * local[Diagram::crossing_of(x)] + Diagram::slot(x); };
  Tangle t;
  t.mates.assign(4 * n + 4, -1);
  t.over_pairs.resize(n);
  for (int i = 0; i < n; ++i) {
    t.over_pairs[i] = static_cast<std::uint8_t>(d.over_pair(crossings[i]));
    for (int k = 0; k < 4; ++k) {
      const DartId x = Diagram::dart(crossings[i], k);
      const DartId y = d.mate(x);
      if (local[Diagram::crossing_of(y)] >= 0) t.mates[4 * i + k] = map_dart(y);
    }
  }
  for (int k = 0; k < 4; ++k) {
    const DartId x = boundary[k];
    if (local[Diagram::crossing_of(x)] < 0 || local[Diagram::crossing_of(d.mate(x))] >= 0) {
      throw KnotError(ErrorKind::kInvalidArgument, "boundary dart does not leave the tangle");
    }
    t.mates[map_dart(x)] = 4 * n + k;
    t.mates[4 * n + k] = map_dart(x);
  }
  if (std::count(t.mates.begin(), t.mates.end(), -1) != 0) {
    throw KnotError(ErrorKind::kInvalidArgument, "tangle has more than four boundary darts");
  }
  return t;
}

std::vector<int> tangle_code(const Tangle& t) {
  const int n = t.crossing_count();
  std::vector<int> label(n, -1);
  std::vector<DartId> entry(n);
  std::vector<int> order;
  std::vector<int> code{n};
  auto visit = [&](DartId y) {
    if (y >= 4 * n) return -1 - (y - 4 * n);
    const int c = y >> 2;
    if (label[c] < 0) {
      label[c] = static_cast<int>(order.size());
      entry[c] = y;
      order.push_back(c);
    }
    return 4 * label[c] + ((y - entry[c]) & 3);
  };
  for (int k = 0; k < 4; ++k) code.push_back(visit(t.mates[4 * n + k]));
  for (std::size_t l = 0; l < order.size(); ++l) {
    const int c = order[l];
    const DartId e = entry[c];
    code.push_back(((e & 3) & 1) == t.over_pairs[c]);
    for (int j = 0; j < 4; ++j) code.push_back(visit(t.mates[Diagram::dart(c, (e & 3) + j)]));
  }
  if (static_cast<int>(order.size()) != n) code.push_back(-100);  // parts not reached from a port
  return code;
}

std::string tangle_pd(const Tangle& t) {
  static const char* kPortNames[4] = {"NE", "NW", "SW", "SE"};
  const int n = t.crossing_count();
  std::vector<std::string> label(4 * n + 4);
  int next = 1;
  for (DartId x = 0; x < 4 * n; ++x) {
    if (!label[x].empty()) continue;
    const DartId y = t.mates[x];
    label[x] = y >= 4 * n ? kPortNames[y - 4 * n] : std::to_string(next++);
    if (y < 4 * n) label[y] = label[x];
  }
  std::ostringstream out;
  for (int c = 0; c < n; ++c) {
    if (c) out << ' ';
    const int start = t.over_pairs[c] == 0 ? 1 : 0;
    out << "X(";
    for (int k = 0; k < 4; ++k) {
      if (k) out << ',';
      out << label[Diagram::dart(c, start + k)];
    }
    out << ')';
  }
  return out.str();
}

Diagram torus_2(int m) { return numerator_closure(horizontal_twist(m)); }

Diagram pretzel(const std::vector<int>& columns) {
  if (columns.empty()) throw KnotError(ErrorKind::kInvalidArgument, "pretzel needs at least one column");
  Tangle t = vertical_twist(columns[0]);
  for (std::size_t i = 1; i < columns.size(); ++i) t = tangle_sum(t, vertical_twist(columns[i]));
  return numerator_closure(t);
}

}  // namespace knotflype
