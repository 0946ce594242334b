#pragma once

#include <istream>
#include <string>
#include <vector>

#include "knotflype/serialize.hpp"

namespace knotflype {

enum class TableFormat { kAuto, kDt, kPd, kGauss };

struct TableEntry {
  std::string id;
  Diagram diagram;
  int line = 0;
};

struct TableWarning {
  int line = 0;
  std::string message;
};

// Reads `identifier code` lines. Blank lines and lines starting with '#' are
// skipped. With kAuto a code containing "X(" is read as PD, one containing
// 'O' or 'U' as Gauss, anything else as DT. A line that fails to parse is
// recorded in `warnings` and skipped when `lenient` is set; otherwise the
// KnotError is rethrown with the line number prefixed to its message.
std::vector<TableEntry> ingest_table(std::istream& in, TableFormat format = TableFormat::kAuto,
                                     bool lenient = false, std::vector<TableWarning>* warnings = nullptr);
// Same for a file; kIo if it cannot be opened.
std::vector<TableEntry> ingest_table_file(const std::string& path, TableFormat format = TableFormat::kAuto,
                                          bool lenient = false, std::vector<TableWarning>* warnings = nullptr);

struct CensusOptions {
  // Empty means every odd prime up to the crossing number.
  std::vector<int> primes;
  GraphOptions graph;
  bool free_periods = true;
};

struct CensusPeriod {
  int p = 0;
  std::size_t node = 0;
};

struct CensusFreePeriod {
  int p = 0;
  int twist_count = 0;
  std::size_t node = 0;
};

struct CensusRow {
  std::string id;
  int crossings = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::vector<CensusPeriod> periods;
  std::vector<CensusFreePeriod> free_periods;
  // "complete", "truncated" (periods are witnesses only) or "invalid".
  std::string status;
  std::string error;
};

std::vector<int> odd_primes_up_to(int n);

// One row for one knot; never throws for a bad diagram, which becomes an
// "invalid" row.
CensusRow census_row(const TableEntry& entry, const CensusOptions& options);
// Rows in input order; `jobs` workers each handle whole rows, so the rows do
// not depend on the worker count.
std::vector<CensusRow> run_census(const std::vector<TableEntry>& entries, const CensusOptions& options, int jobs);

Json census_row_to_json(const CensusRow& row);
// Header: id,crossings,nodes,edges,periods,free_periods,status with periods
// as "3;5" and free periods as "3:1;5:-2".
std::string census_csv_header();
std::string census_row_to_csv(const CensusRow& row);

}  // namespace knotflype
