#include "knotctl.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "knotflype/census.hpp"
#include "knotflype/codes.hpp"

namespace knotctl {

using namespace knotflype;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string pd, dt, gauss;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--pd", pd, "PD code, e.g. \"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\"");
    cmd->add_option("--dt", dt, "DT code, e.g. \"4,6,2\"");
    cmd->add_option("--gauss", gauss, "Gauss code, e.g. \"O-1,U-2,O-3,U-1,O-2,U-3\"");
  }

  Diagram diagram() const {
    const int given = !pd.empty() + !dt.empty() + !gauss.empty();
    if (given != 1) throw UsageError("give exactly one of --pd, --dt, --gauss");
    if (!pd.empty()) return parse_pd(pd);
    if (!dt.empty()) return parse_dt(dt);
    return parse_gauss(gauss);
  }
};

struct Limits {
  std::size_t max_nodes = 100000;
  std::size_t max_edges = 1000000;
  bool mirror = false;
  int jobs = 1;

  void add_to(CLI::App* cmd) {
    if (const char* env = std::getenv("KNOTCTL_MAX_NODES")) {
      try {
        max_nodes = std::stoul(env);
      } catch (const std::exception&) {
        throw UsageError("KNOTCTL_MAX_NODES is not a number");
      }
    }
    cmd->add_option("--max-nodes", max_nodes, "Flype graph node cap (default KNOTCTL_MAX_NODES or 100000)");
    cmd->add_option("--max-edges", max_edges, "Flype graph edge cap");
    cmd->add_flag("--mirror", mirror, "Identify diagrams with their mirror images");
    cmd->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)")->check(CLI::NonNegativeNumber);
  }

  GraphOptions graph() const { return GraphOptions{max_nodes, max_edges, jobs, mirror}; }
};

void print(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

Json verdict_json(const Verdict& v) { return Json{{"ok", v.ok}, {"witness", v.witness}}; }

std::vector<int> parse_primes(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int p = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(p);
    } catch (const std::exception&) {
      throw UsageError("--p expects comma-separated integers, got \"" + text + "\"");
    }
  }
  if (out.empty()) throw UsageError("--p is empty");
  return out;
}

int single_prime(const std::string& text) {
  const auto ps = parse_primes(text);
  if (ps.size() != 1) throw UsageError("--p takes one value for this command");
  return ps[0];
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flype graphs, periods and free periods of prime alternating knots", "knotctl"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Input input;
  Limits limits;
  std::string p_text, format = "json", table, resume;
  bool nontrivial = false, census_mode = false, lenient = false, no_shortcuts = false, no_free = false;
  int site_index = -1;
  CLI::App *validate, *sites, *flype, *graph, *period, *freeperiod, *quot, *bracket, *census;

  try {

  validate = app.add_subcommand("validate", "Check alternating, reduced and prime");
  input.add_to(validate);

  sites = app.add_subcommand("sites", "List flype sites");
  input.add_to(sites);
  sites->add_flag("--nontrivial", nontrivial, "Drop sites that return an equivalent diagram");

  flype = app.add_subcommand("flype", "Apply one flype");
  input.add_to(flype);
  flype->add_option("--site", site_index, "Index into the `sites` listing")->required();

  graph = app.add_subcommand("graph", "Build the flype graph");
  input.add_to(graph);
  limits.add_to(graph);
  graph->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  graph->add_option("--resume", resume, "Continue a graph saved as JSON");

  period = app.add_subcommand("period", "Decide an odd prime period");
  input.add_to(period);
  limits.add_to(period);
  period->add_option("--p", p_text, "Odd prime")->required();
  period->add_flag("--census", census_mode, "Scan the whole graph and list every witness");
  period->add_flag("--no-shortcuts", no_shortcuts, "Always build and scan the flype graph");

  freeperiod = app.add_subcommand("freeperiod", "Look for a free-periodic template");
  input.add_to(freeperiod);
  limits.add_to(freeperiod);
  freeperiod->add_option("--p", p_text, "Odd prime")->required();

  quot = app.add_subcommand("quotient", "Quotient knot of a period");
  input.add_to(quot);
  limits.add_to(quot);
  quot->add_option("--p", p_text, "Odd prime")->required();

  bracket = app.add_subcommand("bracket", "Kauffman bracket and writhe");
  input.add_to(bracket);

  census = app.add_subcommand("census", "Analyse every knot of a table");
  limits.add_to(census);
  census->add_option("--table", table, "File of `id code` lines")->required();
  census->add_option("--p", p_text, "Comma-separated odd primes (default: odd primes up to n)");
  census->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  census->add_flag("--lenient", lenient, "Skip malformed lines with a warning");
  census->add_flag("--no-free", no_free, "Skip free-period detection");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "knotctl: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*validate) {
      const Diagram d = input.diagram();
      const auto alt = validate_alternating(d), red = validate_reduced(d), prime = validate_prime(d);
      const int components = component_count(d);
      print(out, Json{{"crossings", d.crossing_count()},
                      {"components", components},
                      {"alternating", verdict_json(alt)},
                      {"reduced", verdict_json(red)},
                      {"prime", verdict_json(prime)}});
      return alt.ok && red.ok && prime.ok && components == 1 ? 0 : 1;
    }
    if (*sites) {
      const Diagram d = input.diagram();
      Json list = Json::array();
      for (const auto& s : find_flype_sites(d, SiteOptions{nontrivial})) list.push_back(site_to_json(s));
      print(out, Json{{"sites", list}});
      return 0;
    }
    if (*flype) {
      const Diagram d = input.diagram();
      const auto list = find_flype_sites(d);
      if (site_index < 0 || site_index >= static_cast<int>(list.size())) {
        throw KnotError(ErrorKind::kInvalidSite, "site index out of range; the diagram has " +
                                                     std::to_string(list.size()) + " sites");
      }
      const auto result = apply_flype(d, list[site_index]);
      print(out, Json{{"site", site_to_json(list[site_index])},
                      {"created", result.created},
                      {"pd", export_pd(result.diagram)},
                      {"same_diagram", canonical_code(result.diagram) == canonical_code(d)}});
      return 0;
    }
    if (*graph) {
      FlypeGraph g;
      if (!resume.empty()) {
        std::ifstream in(resume);
        if (!in) throw KnotError(ErrorKind::kIo, "cannot open " + resume);
        Json doc;
        try {
          doc = Json::parse(in);
        } catch (const Json::exception& e) {
          throw KnotError(ErrorKind::kMalformedCode, std::string("bad graph file: ") + e.what());
        }
        g = graph_from_json(doc);
        if (g.mirror != limits.mirror) throw UsageError("--mirror must match the saved graph");
        extend_flype_graph(g, limits.graph());
      } else {
        g = build_flype_graph(input.diagram(), limits.graph());
      }
      if (format == "dot") {
        out << graph_to_dot(g);
      } else {
        print(out, graph_to_json(g));
      }
      return g.complete ? 0 : 1;
    }
    if (*period) {
      AnalysisOptions options{limits.graph(), !no_shortcuts, census_mode};
      const auto result = detect_period(input.diagram(), single_prime(p_text), options);
      print(out, period_result_to_json(result));
      return result.reason == "inconclusive" ? 1 : 0;
    }
    if (*freeperiod) {
      AnalysisOptions options{limits.graph(), true, false};
      const auto result = detect_free_period(input.diagram(), single_prime(p_text), options);
      print(out, free_period_result_to_json(result));
      return result.reason == "inconclusive" ? 1 : 0;
    }
    if (*quot) {
      const int p = single_prime(p_text);
      AnalysisOptions options{limits.graph(), true, false};
      const auto result = detect_period(input.diagram(), p, options);
      if (!result.report) {
        throw KnotError(ErrorKind::kInvalidReport, "no period of order " + std::to_string(p) + " (" + result.reason + ")");
      }
      const Diagram q = quotient(*result.report);
      const auto reduced = remove_curls(q);
      print(out, Json{{"period", period_report_to_json(*result.report)},
                      {"pd", export_pd(q)},
                      {"crossings", q.crossing_count()},
                      {"alternating", static_cast<bool>(validate_alternating(q))},
                      {"reduced", static_cast<bool>(validate_reduced(q))},
                      {"curls_removed", reduced ? Json(export_pd(*reduced)) : Json("unknot")},
                      {"bracket", polynomial_to_json(kauffman_bracket(q))}});
      return 0;
    }
    if (*bracket) {
      const Diagram d = input.diagram();
      const auto poly = kauffman_bracket(d);
      print(out, Json{{"bracket", polynomial_to_json(poly)}, {"text", poly.to_string()}, {"writhe", writhe(d)}});
      return 0;
    }
    if (*census) {
      std::vector<TableWarning> warnings;
      const auto entries = ingest_table_file(table, TableFormat::kAuto, lenient, &warnings);
      for (const auto& w : warnings) err << "warning: line " << w.line << ": " << w.message << '\n';
      CensusOptions options;
      if (!p_text.empty()) options.primes = parse_primes(p_text);
      for (const int p : options.primes) {
        if (!is_odd_prime(p)) throw KnotError(ErrorKind::kInvalidArgument, "not an odd prime: " + std::to_string(p));
      }
      options.graph = limits.graph();
      options.free_periods = !no_free;
      const auto rows = run_census(entries, options, limits.jobs);
      bool clean = true;
      if (format == "csv") out << census_csv_header() << '\n';
      for (const auto& row : rows) {
        if (format == "csv") {
          out << census_row_to_csv(row) << '\n';
        } else {
          print(out, census_row_to_json(row));
        }
        clean = clean && row.status == "complete";
      }
      return clean ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "knotctl: " << e.what() << '\n';
    return 2;
  } catch (const KnotError& e) {
    print(out, Json{{"error", error_kind_name(e.kind())}, {"message", e.what()}});
    return 1;
  }
  return 2;
}

}  // namespace knotctl
