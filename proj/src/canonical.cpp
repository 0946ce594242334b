#include "knotflype/canonical.hpp"

#include <cstdio>

namespace knotflype {

namespace {

struct Variant {
  int dir;     // +1 keeps the rotation, -1 reverses it
  int toggle;  // 1 exchanges over and under
};

DartId turn(DartId x, int dir, int j) {
  return Diagram::dart(Diagram::crossing_of(x), Diagram::slot(x) + dir * j);
}

// Writes the code for one root and variant into `out`, giving up as soon as
// it exceeds `best` (when best is non-empty). Returns true if `out` is a new
// minimum.
bool rooted_code(const Diagram& d, DartId root, Variant v, const CanonicalCode& best,
                 CanonicalCode& out, std::vector<int>& label, std::vector<DartId>& entry,
                 std::vector<CrossingId>& order) {
  const int n = d.crossing_count();
  label.assign(n, -1);
  order.clear();
  out.clear();
  out.push_back(n);
  bool smaller = best.empty();
  auto emit = [&](int value) {
    if (!smaller) {
      const int b = best[out.size()];
      if (value > b) return false;
      if (value < b) smaller = true;
    }
    out.push_back(value);
    return true;
  };
  const CrossingId c0 = Diagram::crossing_of(root);
  label[c0] = 0;
  entry[c0] = root;
  order.push_back(c0);
  for (std::size_t l = 0; l < order.size(); ++l) {
    const CrossingId c = order[l];
    const DartId e = entry[c];
    if (!emit(static_cast<int>(d.is_over(e)) ^ v.toggle)) return false;
    for (int j = 0; j < 4; ++j) {
      const DartId y = d.mate(turn(e, v.dir, j));
      const CrossingId cy = Diagram::crossing_of(y);
      if (label[cy] < 0) {
        label[cy] = static_cast<int>(order.size());
        entry[cy] = y;
        order.push_back(cy);
      }
      const int pos = ((Diagram::slot(y) - Diagram::slot(entry[cy])) * v.dir + 8) & 3;
      if (!emit(4 * label[cy] + pos)) return false;
    }
  }
  return smaller;
}

std::vector<Variant> variants(CanonOptions options) {
  if (options.mirror) return {{1, 0}, {-1, 1}, {1, 1}, {-1, 0}};
  return {{1, 0}, {-1, 1}};
}

}  // namespace

Canonicalization canonicalize(const Diagram& d, CanonOptions options) {
  const int n = d.crossing_count();
  CanonicalCode best, work;
  std::vector<int> label(n), best_label;
  std::vector<DartId> entry(n);
  std::vector<CrossingId> order;
  order.reserve(n);
  for (const Variant v : variants(options)) {
    for (DartId root = 0; root < d.dart_count(); ++root) {
      if (rooted_code(d, root, v, best, work, label, entry, order)) {
        best.swap(work);
        best_label = label;
      }
    }
  }
  return Canonicalization{std::move(best), std::move(best_label)};
}

CanonicalCode canonical_code(const Diagram& d, CanonOptions options) {
  return canonicalize(d, options).code;
}

Diagram diagram_from_code(const CanonicalCode& code) {
  if (code.empty() || code[0] < 1 || static_cast<int>(code.size()) != 1 + 5 * code[0]) {
    throw KnotError(ErrorKind::kMalformedCode, "canonical code has the wrong length");
  }
  const int n = code[0];
  std::vector<DartId> mates(4 * n);
  std::vector<std::uint8_t> over(n);
  for (int c = 0; c < n; ++c) {
    const int base = 1 + 5 * c;
    over[c] = code[base] ? 0 : 1;
    for (int j = 0; j < 4; ++j) {
      const int v = code[base + 1 + j];
      if (v < 0 || v >= 4 * n) throw KnotError(ErrorKind::kMalformedCode, "canonical code entry out of range");
      mates[4 * c + j] = v;
    }
  }
  return Diagram(std::move(mates), std::move(over));
}

Diagram canonical_form(const Diagram& d, CanonOptions options) {
  return diagram_from_code(canonical_code(d, options));
}

std::string code_hash(const CanonicalCode& code) {
  std::uint64_t h = 1469598103934665603ull;
  for (const int v : code) {
    auto u = static_cast<std::uint32_t>(v);
    for (int k = 0; k < 4; ++k) {
      h ^= (u >> (8 * k)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

bool propagate(const Diagram& a, const Diagram& b, DartId target, int dir, int toggle,
               std::vector<DartId>& map) {
  map.assign(a.dart_count(), -1);
  std::vector<DartId> stack{0};
  map[0] = target;
  while (!stack.empty()) {
    const DartId x = stack.back();
    stack.pop_back();
    const DartId y = map[x];
    if ((a.is_over(x) ^ toggle) != b.is_over(y)) return false;
    const DartId pairs[2][2] = {{Diagram::next_ccw(x), turn(y, dir, 1)}, {a.mate(x), b.mate(y)}};
    for (const auto& p : pairs) {
      if (map[p[0]] < 0) {
        map[p[0]] = p[1];
        stack.push_back(p[0]);
      } else if (map[p[0]] != p[1]) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Isomorphism> search_isomorphism(const Diagram& a, const Diagram& b, bool allow_reversed,
                                              const std::vector<CrossingId>* crossing_map) {
  if (a.crossing_count() != b.crossing_count()) return std::nullopt;
  std::vector<DartId> map;
  for (int reversed = 0; reversed <= (allow_reversed ? 1 : 0); ++reversed) {
    const int dir = reversed ? -1 : 1;
    DartId first = 0, last = b.dart_count();
    if (crossing_map) {
      first = 4 * (*crossing_map)[0];
      last = first + 4;
    }
    for (DartId y = first; y < last; ++y) {
      if (!propagate(a, b, y, dir, reversed, map)) continue;
      if (crossing_map) {
        bool ok = true;
        for (CrossingId c = 0; c < a.crossing_count() && ok; ++c) {
          ok = Diagram::crossing_of(map[4 * c]) == (*crossing_map)[c];
        }
        if (!ok) continue;
      }
      return Isomorphism{map, reversed != 0};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<DartId>> extend_dart_map(const Diagram& a, const Diagram& b, DartId image_of_zero,
                                                   bool reverse_rotation, bool exchange_over) {
  if (a.crossing_count() != b.crossing_count()) return std::nullopt;
  std::vector<DartId> map;
  if (!propagate(a, b, image_of_zero, reverse_rotation ? -1 : 1, exchange_over ? 1 : 0, map)) return std::nullopt;
  return map;
}

std::optional<Isomorphism> find_isomorphism(const Diagram& a, const Diagram& b,
                                            bool allow_reversed) {
  return search_isomorphism(a, b, allow_reversed, nullptr);
}

std::optional<Isomorphism> find_isomorphism(const Diagram& a, const Diagram& b,
                                            const std::vector<CrossingId>& crossing_map,
                                            bool allow_reversed) {
  return search_isomorphism(a, b, allow_reversed, &crossing_map);
}

Diagram relabel(const Diagram& d, const std::vector<CrossingId>& crossing_perm,
                const std::vector<int>& slot_shift) {
  const int n = d.crossing_count();
  auto image = [&](DartId x) {
    const CrossingId c = Diagram::crossing_of(x);
    return Diagram::dart(crossing_perm[c], Diagram::slot(x) + slot_shift[c]);
  };
  std::vector<DartId> mates(4 * n);
  std::vector<std::uint8_t> over(n);
  for (DartId x = 0; x < d.dart_count(); ++x) mates[image(x)] = image(d.mate(x));
  for (CrossingId c = 0; c < n; ++c) over[crossing_perm[c]] = d.over_pair(c) ^ (slot_shift[c] & 1);
  return Diagram(std::move(mates), std::move(over));
}

}  // namespace knotflype
