// Writes the table of prime alternating knots up to a crossing bound, one
// flype class per knot, as `alt<n>.<k> <dt code>` lines.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numeric>
#include <set>

#include <CLI11.hpp>

#include "knotflype/canonical.hpp"
#include "knotflype/codes.hpp"
#include "knotflype/flype_graph.hpp"

using namespace knotflype;

int main(int argc, char** argv) {
  CLI::App app{"Enumerate prime alternating knots by flype class", "knot_table_gen"};
  int min_n = 3, max_n = 9;
  app.add_option("--min", min_n, "Smallest crossing number")->check(CLI::Range(3, 10));
  app.add_option("--max", max_n, "Largest crossing number")->check(CLI::Range(3, 10));
  CLI11_PARSE(app, argc, argv);

  std::cout << "# prime alternating knots, one reduced alternating diagram per flype class\n";
  std::cout << "# id dt-code\n";
  for (int n = min_n; n <= max_n; ++n) {
    std::set<CanonicalCode> diagrams;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<int> code(n);
      for (int i = 0; i < n; ++i) code[i] = 2 * perm[i];
      try {
        const Diagram d = parse_dt(code);
        if (validate_reduced(d) && validate_prime(d)) diagrams.insert(canonical_code(d, CanonOptions{true}));
      } catch (const KnotError&) {
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Each class is named by the smallest DT code among its diagrams, with
  // signs dropped since mirror images are identified.
    std::set<CanonicalCode> seen;
    std::vector<std::vector<int>> classes;
    for (const auto& code : diagrams) {
      if (seen.count(code)) continue;
      const FlypeGraph g = build_flype_graph(diagram_from_code(code), GraphOptions{1000000, 10000000, 1, true});
      std::vector<int> best;
      for (std::size_t i = 0; i < g.node_count(); ++i) {
        seen.insert(g.codes[i]);
        for (const Diagram& d : {g.nodes[i], reflect(g.nodes[i])}) {
          auto dt = export_dt(d);
          for (int& v : dt) v = std::abs(v);
          if (best.empty() || dt < best) best = dt;
        }
      }
      classes.push_back(best);
    }
    std::sort(classes.begin(), classes.end());
    for (std::size_t k = 0; k < classes.size(); ++k) {
      std::cout << "alt" << n << '.' << k + 1 << ' ';
      for (std::size_t i = 0; i < classes[k].size(); ++i) std::cout << (i ? "," : "") << classes[k][i];
      std::cout << '\n';
    }
  }
}
