#include "knotflype/bracket.hpp"

#include <numeric>
#include <sstream>
#include <vector>

namespace knotflype {

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coeff, int exponent) {
  LaurentPolynomial p;
  p.add(exponent, coeff);
  return p;
}

std::int64_t LaurentPolynomial::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  }
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      out << c;
    } else {
      out << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c);
    }
    out << "*A^" << e;
    first = false;
  }
  return out.str();
}

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

LaurentPolynomial kauffman_bracket(const Diagram& d, int max_crossings) {
  const int n = d.crossing_count();
  if (n > max_crossings) {
    throw KnotError(ErrorKind::kTooLarge, "bracket state sum limited to " + std::to_string(max_crossings) +
                                              " crossings, diagram has " + std::to_string(n));
  }
  const int darts = d.dart_count();
  // count[a][l]: number of states with a A-smoothings and l loops.
  std::vector<std::vector<std::int64_t>> count(n + 1, std::vector<std::int64_t>(2 * n + 2, 0));
  std::vector<int> parent(darts);
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    auto unite = [&](int a, int b) { parent[find(parent, a)] = find(parent, b); };
    for (DartId x = 0; x < darts; ++x) {
      if (x < d.mate(x)) unite(x, d.mate(x));
    }
    int a_count = 0;
    for (CrossingId c = 0; c < n; ++c) {
      // The A-smoothing joins each under dart to the dart after it in the
      // rotation, the B-smoothing each over dart to the dart after it.
      const int o = d.over_pair(c);
      const bool a_smoothing = (state >> c) & 1;
      a_count += a_smoothing;
      const int shift = a_smoothing ? 1 : 0;
      unite(Diagram::dart(c, o + shift), Diagram::dart(c, o + shift + 1));
      unite(Diagram::dart(c, o + shift + 2), Diagram::dart(c, o + shift + 3));
    }
    int loops = 0;
    for (DartId x = 0; x < darts; ++x) loops += find(parent, x) == x;
    ++count[a_count][loops];
  }
  // delta^k expanded once per loop count.
  const LaurentPolynomial delta = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  std::vector<LaurentPolynomial> delta_pow(2 * n + 2);
  delta_pow[0] = LaurentPolynomial::monomial(1, 0);
  for (std::size_t k = 1; k < delta_pow.size(); ++k) delta_pow[k] = delta_pow[k - 1] * delta;
  LaurentPolynomial total;
  for (int a = 0; a <= n; ++a) {
    for (int l = 1; l < 2 * n + 2; ++l) {
      if (count[a][l] == 0) continue;
      total += LaurentPolynomial::monomial(count[a][l], a - (n - a)) * delta_pow[l - 1];
    }
  }
  return total;
}

int writhe(const Diagram& d) {
  int w = 0;
  for (const int s : crossing_signs(d)) w += s;
  return w;
}

}  // namespace knotflype
