#pragma once

#include <random>
#include <string>
#include <vector>

#include "knotflype/census.hpp"
#include "knotflype/codes.hpp"
#include "knotflype/flype_sequence.hpp"

namespace knotflype::testing {

inline const char* kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
inline const char* kFigureEightDt = "4,6,8,2";

inline std::vector<TableEntry> load_table() {
  return ingest_table_file(std::string(KNOTFLYPE_DATA_DIR) + "/alternating_knots.dt");
}

inline std::vector<TableEntry> table_up_to(int max_crossings) {
  std::vector<TableEntry> out;
  for (auto& e : load_table()) {
    if (e.diagram.crossing_count() <= max_crossings) out.push_back(std::move(e));
  }
  return out;
}

// Random crossing permutation plus a random rotation of every crossing.
inline Diagram random_relabel(const Diagram& d, std::mt19937& rng) {
  const int n = d.crossing_count();
  std::vector<CrossingId> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> shift(n);
  for (auto& s : shift) s = static_cast<int>(rng() % 4);
  return relabel(d, perm, shift);
}

// Connected sum made by cutting edge 0 of each diagram and reconnecting the
// ends; b may be turned over (same knot) so the result alternates.
inline Diagram connected_sum(const Diagram& a, const Diagram& b) {
  const int na = a.dart_count();
  for (const Diagram& bb : {b, turn_over(b)}) {
    for (int twist = 0; twist < 2; ++twist) {
      std::vector<DartId> mates(a.mates());
      std::vector<std::uint8_t> over(a.over_pairs());
      for (const DartId m : bb.mates()) mates.push_back(m + na);
      over.insert(over.end(), bb.over_pairs().begin(), bb.over_pairs().end());
      const DartId x = 0, mx = a.mate(0), y = na, my = na + bb.mate(0);
      const DartId y1 = twist ? my : y, y2 = twist ? y : my;
      mates[x] = y1;
      mates[y1] = x;
      mates[mx] = y2;
      mates[y2] = mx;
      try {
        Diagram d(std::move(mates), std::move(over));
        if (validate_alternating(d)) return d;
      } catch (const KnotError&) {
      }
    }
  }
  throw std::logic_error("no alternating connected sum");
}

// Trefoil # trefoil with both summands the same diagram.
inline Diagram granny() {
  const Diagram t = parse_pd(kTrefoilPd);
  return connected_sum(t, t);
}

// A composable random sequence. With probability 1/2 a step is chosen among
// the sites removing the crossing created by the previous step, which makes
// dependent pairs common.
inline FlypeSequence random_sequence(const Diagram& start, int length, std::mt19937& rng) {
  FlypeSequence seq{start, {}};
  Diagram cur = start;
  CrossingId last = -1;
  for (int i = 0; i < length; ++i) {
    const auto sites = find_flype_sites(cur);
    if (sites.empty()) break;
    std::vector<FlypeSite> pool;
    if (last >= 0 && rng() % 2 == 0) {
      for (const auto& s : sites) {
        if (s.crossing == last) pool.push_back(s);
      }
    }
    if (pool.empty()) pool = sites;
    const FlypeSite s = pool[rng() % pool.size()];
    auto result = apply_flype(cur, s);
    seq.sites.push_back(s);
    cur = std::move(result.diagram);
    last = result.created;
  }
  return seq;
}

}  // namespace knotflype::testing
