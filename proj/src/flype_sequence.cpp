#include "knotflype/flype_sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "knotflype/canonical.hpp"

namespace knotflype {

std::vector<Diagram> sequence_diagrams(const FlypeSequence& seq) {
  std::vector<Diagram> out{seq.start};
  for (const auto& s : seq.sites) out.push_back(apply_flype(out.back(), s).diagram);
  return out;
}

namespace {

// Smallest j, then largest i < j, with sites i and j naming one crossing.
std::optional<std::pair<std::size_t, std::size_t>> first_pair(const std::vector<FlypeSite>& sites) {
  for (std::size_t j = 1; j < sites.size(); ++j) {
    for (std::size_t i = j; i-- > 0;) {
      if (sites[i].crossing == sites[j].crossing) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::vector<CrossingId> identity(int n) {
  std::vector<CrossingId> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Isomorphism from a to b, preferring one that keeps crossing ids.
Isomorphism matching_isomorphism(const Diagram& a, const Diagram& b) {
  if (auto iso = find_isomorphism(a, b, identity(a.crossing_count()))) return *iso;
  if (auto iso = find_isomorphism(a, b)) return *iso;
  throw std::logic_error("diagrams expected to be isomorphic are not");
}

std::vector<CrossingId> crossing_map(const Isomorphism& iso, int n) {
  std::vector<CrossingId> m(n);
  for (CrossingId c = 0; c < n; ++c) m[c] = Diagram::crossing_of(iso.dart_map[4 * c]);
  return m;
}

FlypeSite image_site(const Diagram& target, const FlypeSite& s, const std::vector<CrossingId>& map) {
  std::vector<CrossingId> domain;
  for (const CrossingId x : s.domain) domain.push_back(map[x]);
  std::sort(domain.begin(), domain.end());
  for (auto& t : find_flype_sites(target)) {
    if (t.crossing == map[s.crossing] && t.domain == domain) return t;
  }
  throw std::logic_error("no image of a flype site under an isomorphism");
}

// Re-expresses the steps from `from` onward on `replacement`, which must be
// isomorphic to the diagram before step `from`.
std::vector<FlypeSite> transport(const std::vector<Diagram>& diagrams, const std::vector<FlypeSite>& sites,
                                 std::size_t from, const Diagram& replacement) {
  std::vector<FlypeSite> out;
  Diagram current = replacement;
  const int n = replacement.crossing_count();
  auto map = crossing_map(matching_isomorphism(diagrams[from], current), n);
  for (std::size_t k = from; k < sites.size(); ++k) {
    FlypeSite s = image_site(current, sites[k], map);
    current = apply_flype(current, s).diagram;
    out.push_back(std::move(s));
    auto iso = find_isomorphism(diagrams[k + 1], current, map);
    if (!iso) throw std::logic_error("flype did not commute with an isomorphism");
  }
  return out;
}

// Sites of d removing crossing c whose result has the given code, with the
// preferred domain first when present.
std::optional<FlypeSite> site_reaching(const Diagram& d, CrossingId c, const CanonicalCode& goal,
                                       const std::vector<CrossingId>& preferred_domain) {
  auto sites = find_flype_sites(d);
  std::stable_partition(sites.begin(), sites.end(), [&](const FlypeSite& s) {
    return s.crossing == c && s.domain == preferred_domain;
  });
  std::stable_partition(sites.begin(), sites.end(), [&](const FlypeSite& s) { return s.crossing == c; });
  for (const auto& s : sites) {
    if (s.crossing != c) break;
    if (canonical_code(apply_flype(d, s).diagram) == goal) return s;
  }
  return std::nullopt;
}

std::vector<CrossingId> set_union(const std::vector<CrossingId>& a, const std::vector<CrossingId>& b) {
  std::vector<CrossingId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<CrossingId> set_difference(const std::vector<CrossingId>& a, const std::vector<CrossingId>& b) {
  std::vector<CrossingId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(const std::vector<CrossingId>& a, const std::vector<CrossingId>& b) {
  std::vector<CrossingId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.empty();
}

}  // namespace

bool has_create_remove_pair(const FlypeSequence& seq) { return first_pair(seq.sites).has_value(); }

std::optional<std::pair<FlypeSite, FlypeSite>> commute_flypes(const Diagram& d, const FlypeSite& first,
                                                              const FlypeSite& second) {
  if (first.crossing == second.crossing) return std::nullopt;
  const Diagram mid0 = apply_flype(d, first).diagram;
  const CanonicalCode goal = canonical_code(apply_flype(mid0, second).diagram);
  std::optional<std::pair<FlypeSite, FlypeSite>> swapped;
  for (const auto& s : find_flype_sites(d)) {
    if (s.crossing != second.crossing) continue;
    const Diagram mid = apply_flype(d, s).diagram;
    for (const auto& t : find_flype_sites(mid)) {
      if (t.crossing != first.crossing) continue;
      if (canonical_code(apply_flype(mid, t).diagram) != goal) continue;
      if (!swapped || (s.domain == second.domain && t.domain == first.domain)) swapped.emplace(s, t);
    }
  }
  return swapped;
}

FlypeSequence normalize_flype_sequence(const FlypeSequence& seq, NormalizeStats* stats) {
  NormalizeStats local;
  NormalizeStats& st = stats ? *stats : local;
  std::vector<FlypeSite> sites = seq.sites;
  std::vector<Diagram> diagrams = sequence_diagrams(seq);
  const CanonicalCode end_code = canonical_code(diagrams.back());

  // Every rewrite either shortens the sequence or moves a dependent step
  // one place left, so this bound is never reached by a correct run.
  const std::size_t budget = 4 * (sites.size() + 1) * (sites.size() + 1);
  for (std::size_t round = 0;; ++round) {
    if (round > budget) throw std::logic_error("flype sequence normalization did not terminate");
    const auto pair = first_pair(sites);
    if (!pair) break;
    const auto [i, j] = *pair;
    std::vector<FlypeSite> head(sites.begin(), sites.begin() + static_cast<long>(i));
    std::vector<FlypeSite> middle;
    std::size_t resume;
    Diagram joined;
    if (j == i + 1) {
      // Dependent neighbours: the second removes what the first created.
      const Diagram& before = diagrams[i];
      const Diagram& after = diagrams[i + 2];
      const CanonicalCode goal = canonical_code(after);
      const auto& d1 = sites[i].domain;
      const auto& d2 = sites[i + 1].domain;
      if (canonical_code(before) == goal) {
        ++st.cancellations;
        joined = before;
      } else {
        std::vector<CrossingId> guess;
        if (disjoint(d1, d2)) {
          guess = set_union(d1, d2);
        } else if (std::includes(d1.begin(), d1.end(), d2.begin(), d2.end())) {
          guess = set_difference(d1, d2);
        } else if (std::includes(d2.begin(), d2.end(), d1.begin(), d1.end())) {
          guess = set_difference(d2, d1);
        }
        auto merged = site_reaching(before, sites[i].crossing, goal, guess);
        if (!merged) {
          throw KnotError(ErrorKind::kConfigurationA,
                          "two dependent flypes at crossing " + std::to_string(sites[i].crossing) +
                              " have no single replacement; the diagram is not prime");
        }
        ++st.merges;
        middle.push_back(*merged);
        joined = apply_flype(before, *merged).diagram;
      }
      resume = i + 2;
    } else {
      // Swap steps j-1 and j: first remove the crossing step j removes, then
      // the one step j-1 removes.
      const std::size_t k = j - 1;
      const Diagram& before = diagrams[k];
      const auto swapped = commute_flypes(before, sites[k], sites[k + 1]);
      if (!swapped) throw std::logic_error("independent flypes failed to commute");
      ++st.commutes;
      head.assign(sites.begin(), sites.begin() + static_cast<long>(k));
      middle = {swapped->first, swapped->second};
      joined = apply_flype(apply_flype(before, swapped->first).diagram, swapped->second).diagram;
      resume = k + 2;
    }
    std::vector<FlypeSite> tail = transport(diagrams, sites, resume, joined);
    sites = std::move(head);
    sites.insert(sites.end(), middle.begin(), middle.end());
    sites.insert(sites.end(), tail.begin(), tail.end());
    diagrams = sequence_diagrams(FlypeSequence{seq.start, sites});
  }
  if (canonical_code(diagrams.back()) != end_code) {
    throw std::logic_error("normalization changed the end diagram");
  }
  return FlypeSequence{seq.start, sites};
}

}  // namespace knotflype
