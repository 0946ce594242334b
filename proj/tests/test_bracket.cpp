#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <numeric>
#include <regex>

#include "knotflype/bracket.hpp"
#include "knotflype/tangle.hpp"
#include "test_support.hpp"

namespace knotflype {
namespace {

LaurentPolynomial poly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  LaurentPolynomial p;
  for (const auto& [e, c] : terms) p += LaurentPolynomial::monomial(c, e);
  return p;
}

LaurentPolynomial power(const LaurentPolynomial& p, int k) {
  LaurentPolynomial out = LaurentPolynomial::monomial(1, 0);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

// (-A^3)^(-w) <D>: the writhe-normalized bracket, an isotopy invariant.
LaurentPolynomial normalized(const Diagram& d) {
  const int w = writhe(d);
  const auto factor = LaurentPolynomial::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  return factor * kauffman_bracket(d);
}

// State sum over PD labels: X(a,b,c,d) smooths to (a,b)(c,d) with weight A
// and to (a,d)(b,c) with weight A^-1.
LaurentPolynomial pd_bracket(const std::string& pd) {
  std::vector<std::array<int, 4>> xs;
  const std::regex re(R"(X\((\d+),(\d+),(\d+),(\d+)\))");
  int labels = 0;
  for (auto it = std::sregex_iterator(pd.begin(), pd.end(), re); it != std::sregex_iterator(); ++it) {
    std::array<int, 4> x;
    for (int k = 0; k < 4; ++k) {
      x[k] = std::stoi((*it)[k + 1]);
      labels = std::max(labels, x[k]);
    }
    xs.push_back(x);
  }
  const int n = static_cast<int>(xs.size());
  const auto delta = poly({{2, -1}, {-2, -1}});
  LaurentPolynomial total;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> parent(labels + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    auto join = [&](int a, int b) { parent[find(a)] = find(b); };
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = xs[c];
      if ((mask >> c) & 1) {
        join(x[0], x[3]);
        join(x[1], x[2]);
      } else {
        ++a_count;
        join(x[0], x[1]);
        join(x[2], x[3]);
      }
    }
    int loops = 0;
    for (int v = 1; v <= labels; ++v) loops += find(v) == v;
    total += LaurentPolynomial::monomial(1, a_count - (n - a_count)) * power(delta, loops - 1);
  }
  return total;
}

TEST(Laurent, Arithmetic) {
  const auto p = poly({{1, 2}, {-1, -1}});
  EXPECT_EQ(p.coeff(1), 2);
  EXPECT_EQ(p.coeff(0), 0);
  EXPECT_TRUE((p + poly({{1, -2}, {-1, 1}})).is_zero());
  EXPECT_EQ(p * poly({{1, 1}}), poly({{2, 2}, {0, -1}}));
  EXPECT_EQ(p.min_exponent(), -1);
  EXPECT_EQ(p.max_exponent(), 1);
  EXPECT_EQ(poly({{-4, 1}, {0, -2}, {4, 1}}).to_string(), "1*A^-4 - 2*A^0 + 1*A^4");
  EXPECT_EQ(LaurentPolynomial().to_string(), "0");
  EXPECT_EQ(LaurentPolynomial::monomial(0, 3), LaurentPolynomial());
}

TEST(Bracket, Trefoil) {
  const Diagram t = parse_pd(testing::kTrefoilPd);
  EXPECT_EQ(kauffman_bracket(t), poly({{-5, -1}, {3, -1}, {7, 1}}));
  EXPECT_EQ(std::abs(writhe(t)), 3);
}

TEST(Bracket, FigureEight) {
  const Diagram f = parse_dt(std::string_view(testing::kFigureEightDt));
  EXPECT_EQ(kauffman_bracket(f), poly({{-8, 1}, {-4, -1}, {0, 1}, {4, -1}, {8, 1}}));
  EXPECT_EQ(writhe(f), 0);
}

TEST(Bracket, TwoCrossingUnknots) {
  // Two curls: opposite signs cancel, equal signs give (-A^3)^(+-2).
  for (const auto& code : {std::vector<int>{2, 4}, std::vector<int>{2, -4}, std::vector<int>{-2, -4}}) {
    const Diagram d = parse_dt(code);
    EXPECT_EQ(normalized(d), LaurentPolynomial::monomial(1, 0));
  }
}

TEST(Bracket, KinkFactor) {
  // Trefoil with one curl added; the curl multiplies by -A^3 or -A^-3.
  const Diagram kinked = parse_dt(std::vector<int>{2, 6, 8, 4});
  const Diagram plain = *remove_curls(kinked);
  const int dw = writhe(kinked) - writhe(plain);
  ASSERT_EQ(std::abs(dw), 1);
  EXPECT_EQ(kauffman_bracket(kinked), LaurentPolynomial::monomial(-1, 3 * dw) * kauffman_bracket(plain));
}

TEST(Bracket, MatchesPdLabelStateSum) {
  for (const auto& e : testing::load_table()) {
    EXPECT_EQ(kauffman_bracket(e.diagram), pd_bracket(export_pd(e.diagram))) << e.id;
  }
}

TEST(Bracket, SpanIsFourN) {
  for (const auto& e : testing::load_table()) {
    const auto b = kauffman_bracket(e.diagram);
    EXPECT_EQ(b.max_exponent() - b.min_exponent(), 4 * e.diagram.crossing_count()) << e.id;
  }
  const auto p = kauffman_bracket(pretzel({5, 5, 5}));
  EXPECT_EQ(p.max_exponent() - p.min_exponent(), 60);
}

TEST(Bracket, MirrorInvertsA) {
  for (const auto& e : testing::table_up_to(8)) {
    const auto b = kauffman_bracket(e.diagram);
    LaurentPolynomial inverted;
    for (const auto& [x, c] : b.terms()) inverted += LaurentPolynomial::monomial(c, -x);
    EXPECT_EQ(kauffman_bracket(reflect(e.diagram)), inverted) << e.id;
  }
}

TEST(Bracket, TooLarge) {
  try {
    kauffman_bracket(pretzel({5, 5, 5}), 10);
    FAIL();
  } catch (const KnotError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTooLarge);
  }
}

}  // namespace
}  // namespace knotflype
