#include "knotflype/census.hpp"

#include <fstream>
#include <sstream>

#include "knotflype/codes.hpp"
#include "parallel.hpp"

namespace knotflype {

namespace {

Diagram parse_code(std::string_view code, TableFormat format) {
  if (format == TableFormat::kAuto) {
    if (code.find("X(") != std::string_view::npos) {
      format = TableFormat::kPd;
    } else if (code.find_first_of("OU") != std::string_view::npos) {
      format = TableFormat::kGauss;
    } else {
      format = TableFormat::kDt;
    }
  }
  switch (format) {
    case TableFormat::kPd:
      return parse_pd(code);
    case TableFormat::kGauss:
      return parse_gauss(code);
    default:
      return parse_dt(code);
  }
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<TableEntry> ingest_table(std::istream& in, TableFormat format, bool lenient,
                                     std::vector<TableWarning>* warnings) {
  std::vector<TableEntry> entries;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text[0] == '#') continue;
    const auto split = text.find_first_of(" \t");
    try {
      if (split == std::string::npos) throw KnotError(ErrorKind::kMalformedCode, "missing code after identifier");
      entries.push_back(TableEntry{text.substr(0, split), parse_code(trim(text.substr(split)), format), line});
    } catch (const KnotError& e) {
      if (!lenient) throw KnotError(e.kind(), "line " + std::to_string(line) + ": " + e.what());
      if (warnings) warnings->push_back(TableWarning{line, e.what()});
    }
  }
  return entries;
}

std::vector<TableEntry> ingest_table_file(const std::string& path, TableFormat format, bool lenient,
                                          std::vector<TableWarning>* warnings) {
  std::ifstream in(path);
  if (!in) throw KnotError(ErrorKind::kIo, "cannot open " + path);
  return ingest_table(in, format, lenient, warnings);
}

std::vector<int> odd_primes_up_to(int n) {
  std::vector<int> out;
  for (int p = 3; p <= n; p += 2) {
    if (is_odd_prime(p)) out.push_back(p);
  }
  return out;
}

CensusRow census_row(const TableEntry& entry, const CensusOptions& options) {
  CensusRow row;
  row.id = entry.id;
  row.crossings = entry.diagram.crossing_count();
  try {
    GraphOptions graph_options = options.graph;
    graph_options.jobs = 1;
    const FlypeGraph graph = build_flype_graph(entry.diagram, graph_options);
    row.nodes = graph.node_count();
    row.edges = graph.edges.size();
    row.status = graph.complete ? "complete" : "truncated";
    const auto primes = options.primes.empty() ? odd_primes_up_to(row.crossings) : options.primes;
    for (const int p : primes) {
      if (row.crossings % p == 0) {
        const auto result = detect_period_in_graph(graph, p);
        if (result.report) row.periods.push_back(CensusPeriod{p, result.report->node});
      }
      if (options.free_periods) {
        const auto result = detect_free_period_in_graph(graph, p);
        if (result.report) {
          row.free_periods.push_back(CensusFreePeriod{p, result.report->twist_count, result.report->node});
        }
      }
    }
  } catch (const KnotError& e) {
    row.status = "invalid";
    row.error = std::string(error_kind_name(e.kind())) + ": " + e.what();
  }
  return row;
}

std::vector<CensusRow> run_census(const std::vector<TableEntry>& entries, const CensusOptions& options, int jobs) {
  std::vector<CensusRow> rows(entries.size());
  detail::parallel_for(entries.size(), jobs, [&](std::size_t i) { rows[i] = census_row(entries[i], options); });
  return rows;
}

Json census_row_to_json(const CensusRow& row) {
  Json periods = Json::array();
  for (const auto& p : row.periods) periods.push_back(Json{{"p", p.p}, {"node", p.node}});
  Json free = Json::array();
  for (const auto& f : row.free_periods) {
    free.push_back(Json{{"p", f.p}, {"twist_count", f.twist_count}, {"node", f.node}});
  }
  Json j{{"id", row.id},
         {"crossings", row.crossings},
         {"nodes", row.nodes},
         {"edges", row.edges},
         {"periods", periods},
         {"free_periods", free},
         {"status", row.status}};
  if (!row.error.empty()) j["error"] = row.error;
  return j;
}

std::string census_csv_header() { return "id,crossings,nodes,edges,periods,free_periods,status"; }

std::string census_row_to_csv(const CensusRow& row) {
  std::ostringstream out;
  out << row.id << ',' << row.crossings << ',' << row.nodes << ',' << row.edges << ',';
  for (std::size_t i = 0; i < row.periods.size(); ++i) out << (i ? ";" : "") << row.periods[i].p;
  out << ',';
  for (std::size_t i = 0; i < row.free_periods.size(); ++i) {
    out << (i ? ";" : "") << row.free_periods[i].p << ':' << row.free_periods[i].twist_count;
  }
  out << ',' << row.status;
  return out.str();
}

}  // namespace knotflype
