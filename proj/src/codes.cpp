#include "knotflype/codes.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

namespace knotflype {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw KnotError(ErrorKind::kMalformedCode, what);
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

long read_int(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  const std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) malformed("expected an integer at offset " + std::to_string(start));
  if (pos - digits > 9) malformed("integer too long at offset " + std::to_string(start));
  return std::strtol(std::string(text.substr(start, pos - start)).c_str(), nullptr, 10);
}

void reject_small(int n) {
  if (n == 0) malformed("empty code");
  if (n == 1) {
    throw KnotError(ErrorKind::kNotReduced,
                    "a one-crossing diagram is never reduced; at least three crossings are needed");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// PD

Diagram parse_pd(std::string_view text) {
  std::vector<std::array<long, 4>> tuples;
  std::size_t pos = 0;
  for (;;) {
    skip_space(text, pos);
    if (pos >= text.size()) break;
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] != 'X' && text[pos] != 'x') {
      malformed("expected X( at offset " + std::to_string(pos));
    }
    ++pos;
    skip_space(text, pos);
    if (pos >= text.size() || (text[pos] != '(' && text[pos] != '[')) {
      malformed("expected ( after X at offset " + std::to_string(pos));
    }
    const char close = text[pos] == '(' ? ')' : ']';
    ++pos;
    std::array<long, 4> t{};
    for (int k = 0; k < 4; ++k) {
      t[k] = read_int(text, pos);
      skip_space(text, pos);
      if (k < 3) {
        if (pos >= text.size() || text[pos] != ',') malformed("expected , in PD tuple");
        ++pos;
      }
    }
    if (pos >= text.size() || text[pos] != close) malformed("unterminated PD tuple");
    ++pos;
    tuples.push_back(t);
  }
  const int n = static_cast<int>(tuples.size());
  reject_small(n);

  std::map<long, std::vector<DartId>> ends;
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < 4; ++k) ends[tuples[c][k]].push_back(4 * c + k);
  }
  std::vector<DartId> mates(4 * n, -1);
  for (const auto& [label, darts] : ends) {
    if (darts.size() != 2) {
      throw KnotError(ErrorKind::kNotFourValent, "edge label " + std::to_string(label) + " occurs " +
                                                     std::to_string(darts.size()) + " times");
    }
    mates[darts[0]] = darts[1];
    mates[darts[1]] = darts[0];
  }
  // Slot 0 is the incoming under-strand, so darts {1,3} are over.
  return Diagram(std::move(mates), std::vector<std::uint8_t>(n, 1));
}

std::string export_pd(const Diagram& d) {
  const auto path = knot_path(d);
  if (static_cast<int>(path.size()) * 2 != d.dart_count()) {
    throw KnotError(ErrorKind::kNotAKnot, "PD export needs a one-component diagram");
  }
  // Edge k runs from path[k] to the incoming dart mate(path[k]).
  std::vector<int> label(d.dart_count(), 0);
  std::vector<char> incoming(d.dart_count(), 0);
  for (std::size_t k = 0; k < path.size(); ++k) {
    label[path[k]] = static_cast<int>(k) + 1;
    label[d.mate(path[k])] = static_cast<int>(k) + 1;
    incoming[d.mate(path[k])] = 1;
  }
  std::ostringstream out;
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    int start = 0;
    for (int k = 0; k < 4; ++k) {
      const DartId x = Diagram::dart(c, k);
      if (incoming[x] && !d.is_over(x)) start = k;
    }
    if (c) out << ' ';
    out << "X(";
    for (int k = 0; k < 4; ++k) {
      if (k) out << ',';
      out << label[Diagram::dart(c, start + k)];
    }
    out << ')';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Curves

std::optional<Diagram> realize_curve(const std::vector<int>& sequence,
                                     const std::vector<char>& orientation,
                                     const std::vector<char>& first_over) {
  const int n = static_cast<int>(orientation.size());
  const int m = static_cast<int>(sequence.size());
  std::vector<int> seen(n, 0);
  std::vector<DartId> in(m), out(m);
  for (int i = 0; i < m; ++i) {
    const int c = sequence[i];
    if (seen[c] == 0) {
      in[i] = 4 * c + 2;
      out[i] = 4 * c + 0;
    } else {
      in[i] = 4 * c + (orientation[c] ? 1 : 3);
      out[i] = 4 * c + (orientation[c] ? 3 : 1);
    }
    ++seen[c];
  }
  std::vector<DartId> mates(4 * n);
  for (int i = 0; i < m; ++i) {
    const DartId a = out[i], b = in[(i + 1) % m];
    mates[a] = b;
    mates[b] = a;
  }
  std::vector<std::uint8_t> over(n);
  for (int c = 0; c < n; ++c) over[c] = first_over[c] ? 0 : 1;
  try {
    return Diagram(std::move(mates), std::move(over));
  } catch (const KnotError& e) {
    if (e.kind() == ErrorKind::kNonPlanar) return std::nullopt;
    throw;
  }
}

// ---------------------------------------------------------------------------
// DT

namespace {

struct CurveData {
  std::vector<int> sequence;    // crossing per label, label i at index i-1
  std::vector<char> first_over; // per crossing
  int label_one_crossing = 0;
};

CurveData curve_from_dt(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size());
  reject_small(n);
  CurveData data;
  data.sequence.assign(2 * n, -1);
  data.first_over.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const int odd = 2 * i + 1;
    const int even = std::abs(code[i]);
    if (even % 2 != 0 || even < 2 || even > 2 * n) {
      malformed("DT entries must be signed even integers in 2.." + std::to_string(2 * n));
    }
    if (data.sequence[even - 1] != -1) malformed("DT entry " + std::to_string(even) + " repeats");
    data.sequence[odd - 1] = i;
    data.sequence[even - 1] = i;
    const bool odd_under = code[i] > 0;
    // The first pass is whichever label is smaller.
    const bool odd_first = odd < even;
    data.first_over[i] = odd_first ? !odd_under : odd_under;
  }
  data.label_one_crossing = 0;
  return data;
}

}  // namespace

std::vector<int> parse_dt_text(std::string_view text) {
  std::vector<int> code;
  std::size_t pos = 0;
  for (;;) {
    skip_space(text, pos);
    if (pos >= text.size()) break;
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    code.push_back(static_cast<int>(read_int(text, pos)));
  }
  return code;
}

Diagram parse_dt(std::string_view text) { return parse_dt(parse_dt_text(text)); }

std::optional<std::vector<char>> find_planar_orientation(const std::vector<int>& sequence, int n) {
  const int m = static_cast<int>(sequence.size());
  std::vector<int> first(n, -1), second(n, -1);
  for (int i = 0; i < m; ++i) {
    const int c = sequence[i];
    if (c < 0 || c >= n) return std::nullopt;
    (first[c] < 0 ? first[c] : second[c]) = i;
  }
  for (int c = 0; c < n; ++c) {
    if (second[c] < 0) return std::nullopt;
  }
  // Crossings are decided in the order their second visit comes up. After
  // each decision the drawn prefix of the curve, with unfinished crossings
  // smoothed away and two leaves at its loose ends, must be a plane map:
  // K finished crossings need exactly K + 1 faces.
  std::vector<int> order(n);
  for (int c = 0; c < n; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return second[a] < second[b]; });

  std::vector<char> bit(n, 0);
  std::vector<DartId> mate(4 * n + 2);
  std::vector<char> seen(4 * n + 2);
  const DartId leaf_a = 4 * n, leaf_b = 4 * n + 1;
  auto rotate = [&](DartId x) { return x >= 4 * n ? x : Diagram::next_ccw(x); };

  auto prefix_planar = [&](int decided) {
    const int t = second[order[decided]];
    std::vector<DartId> darts{leaf_a, leaf_b};
    DartId loose = leaf_a;
    int finished = 0;
    for (int i = 0; i <= t; ++i) {
      const int c = sequence[i];
      if (second[c] > t) continue;
      DartId in, out;
      if (i == first[c]) {
        in = 4 * c + 2;
        out = 4 * c;
        ++finished;
      } else {
        in = 4 * c + (bit[c] ? 1 : 3);
        out = 4 * c + (bit[c] ? 3 : 1);
      }
      mate[loose] = in;
      mate[in] = loose;
      darts.push_back(in);
      darts.push_back(out);
      loose = out;
    }
    mate[loose] = leaf_b;
    mate[leaf_b] = loose;
    for (const DartId x : darts) seen[x] = 0;
    int faces = 0;
    for (const DartId x : darts) {
      if (seen[x]) continue;
      ++faces;
      DartId y = x;
      do {
        seen[y] = 1;
        y = rotate(mate[y]);
      } while (y != x);
    }
    return faces == finished + 1;
  };

  std::vector<int> tried(n, -1);
  int level = 0;
  while (level >= 0) {
    if (level == n) {
      if (realize_curve(sequence, bit, std::vector<char>(n, 1))) return bit;
      --level;
      continue;
    }
    const int c = order[level];
    // The first decision is fixed by the reflection symmetry.
    const int limit = level == 0 ? 0 : 1;
    if (tried[level] >= limit) {
      tried[level] = -1;
      --level;
      continue;
    }
    bit[c] = static_cast<char>(++tried[level]);
    if (prefix_planar(level)) ++level;
  }
  return std::nullopt;
}

namespace {

// Of a diagram and its reflection, keep the one whose crossing carrying
// label 1 is negative.
Diagram fix_chirality(const Diagram& d, const std::vector<char>& bits, const CurveData& data) {
  const auto signs = crossing_signs(d);
  if (signs[data.label_one_crossing] < 0) return d;
  std::vector<char> flipped(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) flipped[i] = !bits[i];
  auto r = realize_curve(data.sequence, flipped, data.first_over);
  if (!r) throw std::logic_error("reflected realization failed");
  return *r;
}

}  // namespace

Diagram parse_dt(const std::vector<int>& code) {
  const CurveData data = curve_from_dt(code);
  const int n = static_cast<int>(code.size());
  auto bits = find_planar_orientation(data.sequence, n);
  std::optional<Diagram> d;
  if (bits) d = realize_curve(data.sequence, *bits, data.first_over);
  if (!d) throw KnotError(ErrorKind::kUnrealizable, "DT code has no planar realization");
  return fix_chirality(*d, *bits, data);
}

std::vector<int> export_dt(const Diagram& d) {
  const auto path = knot_path(d);
  const int n = d.crossing_count();
  if (static_cast<int>(path.size()) != 2 * n) {
    throw KnotError(ErrorKind::kNotAKnot, "DT export needs a one-component diagram");
  }
  const int m = 2 * n;
  std::vector<int> best;
  for (int dir : {1, -1}) {
    for (int start = 0; start < m; ++start) {
      // Visit order: position k holds the exit dart of the k-th visited crossing.
      std::vector<DartId> visit(m);
      for (int k = 0; k < m; ++k) {
        const int idx = ((start + dir * k) % m + m) % m;
        visit[k] = path[idx];
      }
      std::vector<int> label_a(n, 0), label_b(n, 0);
      std::vector<char> a_over(n, 0);
      bool parity_ok = true;
      for (int k = 0; k < m; ++k) {
        const CrossingId c = Diagram::crossing_of(visit[k]);
        if (label_a[c] == 0) {
          label_a[c] = k + 1;
          a_over[c] = d.is_over(visit[k]);
        } else {
          label_b[c] = k + 1;
        }
      }
      std::vector<int> code(n, 0);
      for (CrossingId c = 0; c < n; ++c) {
        const int a = label_a[c], b = label_b[c];
        if ((a + b) % 2 == 0) {
          parity_ok = false;
          break;
        }
        const int odd = a % 2 ? a : b;
        const int even = a % 2 ? b : a;
        const bool odd_over = a % 2 ? a_over[c] : !a_over[c];
        code[(odd - 1) / 2] = odd_over ? -even : even;
      }
      if (!parity_ok) continue;
      if (best.empty() || code < best) best = code;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Gauss

GaussCode export_gauss(const Diagram& d) {
  const auto path = knot_path(d);
  if (static_cast<int>(path.size()) * 2 != d.dart_count()) {
    throw KnotError(ErrorKind::kNotAKnot, "Gauss export needs a one-component diagram");
  }
  const auto signs = crossing_signs(d);
  GaussCode code;
  code.reserve(path.size());
  for (const DartId out : path) {
    const CrossingId c = Diagram::crossing_of(out);
    code.push_back({d.is_over(out), signs[c], c + 1});
  }
  return code;
}

std::string format_gauss(const GaussCode& code) {
  std::ostringstream out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) out << ',';
    out << (code[i].over ? 'O' : 'U') << (code[i].sign > 0 ? '+' : '-') << code[i].label;
  }
  return out.str();
}

GaussCode parse_gauss_text(std::string_view text) {
  GaussCode code;
  std::size_t pos = 0;
  for (;;) {
    skip_space(text, pos);
    if (pos >= text.size()) break;
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    const char mark = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (mark != 'O' && mark != 'U') malformed("Gauss token must start with O or U");
    ++pos;
    if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) {
      malformed("Gauss token needs an explicit crossing sign");
    }
    const int sign = text[pos] == '+' ? 1 : -1;
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      malformed("Gauss token needs a crossing label");
    }
    const long label = read_int(text, pos);
    if (label < 1) malformed("Gauss crossing labels start at 1");
    code.push_back({mark == 'O', sign, static_cast<int>(label)});
  }
  return code;
}

Diagram parse_gauss(std::string_view text) { return parse_gauss(parse_gauss_text(text)); }

Diagram parse_gauss(const GaussCode& code) {
  if (code.empty()) malformed("empty code");
  if (code.size() % 2) malformed("Gauss code length must be even");
  // Labels are compacted in increasing order.
  std::map<int, int> index;
  for (const auto& t : code) index.emplace(t.label, 0);
  int next = 0;
  for (auto& [label, idx] : index) idx = next++;
  const int n = next;
  if (static_cast<int>(code.size()) != 2 * n) {
    malformed("every crossing label must occur exactly twice");
  }
  std::vector<int> count(n, 0), over_count(n, 0), sign(n, 0);
  std::vector<int> sequence;
  for (const auto& t : code) {
    const int c = index[t.label];
    ++count[c];
    over_count[c] += t.over;
    if (sign[c] != 0 && sign[c] != t.sign) malformed("crossing " + std::to_string(t.label) + " has two signs");
    sign[c] = t.sign;
    sequence.push_back(c);
  }
  for (int c = 0; c < n; ++c) {
    if (count[c] != 2 || over_count[c] != 1) {
      malformed("crossing labels must occur once over and once under");
    }
  }
  reject_small(n);
  // With the first pass entering at slot 2 and leaving at slot 0, the crossing
  // sign fixes where the second pass leaves.
  std::vector<char> first_over(n, 0), orientation(n, 0), seen(n, 0);
  for (std::size_t i = 0; i < code.size(); ++i) {
    const int c = sequence[i];
    if (seen[c]) continue;
    seen[c] = 1;
    const bool over_first = code[i].over;
    first_over[c] = over_first;
    // Second pass leaves at slot 1 when orientation bit is 0.
    // Over leaves slot 0: sign +1 needs under leaving slot 1.
    // Under leaves slot 0: sign +1 needs over leaving slot 3.
    const bool leaves_at_1 = over_first ? sign[c] > 0 : sign[c] < 0;
    orientation[c] = leaves_at_1 ? 0 : 1;
  }
  auto d = realize_curve(sequence, orientation, first_over);
  if (!d) throw KnotError(ErrorKind::kNonPlanar, "Gauss code is not planar");
  return *d;
}

}  // namespace knotflype
