#pragma once

// CSV tables and a static SVG line chart.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cchain/census.hpp"
#include "cchain/exactmath.hpp"

namespace cchain {

/// Exact decimal expansion of a nonnegative rational, truncated to digits
/// fractional places (dyadic rationals with denominator <= 2^digits are exact).
std::string format_fixed(const Rational& r, int digits = 12);

struct TableRow {
  int n = 0;
  std::optional<Count> gamma;
  std::optional<std::int64_t> t;
  std::optional<Count> delta;
  std::optional<std::string> ratio_gamma;    // (gamma + 2^(n-1)) / 2^n
  std::optional<std::string> ratio_gamma_t;  // (gamma + T + 2^(n-1)) / 2^n
  std::optional<std::string> t_over_delta;   // T / delta, when delta > 0
};

/// Fills the derived ratio columns from whatever counts are present.
void fill_ratios(TableRow& row);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by name, or nullopt.
  std::optional<std::size_t> column(const std::string& name) const;
};

/// Header: n,gamma,t,delta,ratio_gamma,ratio_gamma_t,t_over_delta.
CsvTable to_csv(const std::vector<TableRow>& rows);
CsvTable to_csv(const std::vector<CensusReport>& reports, TAccounting accounting);

void write_csv(std::ostream& os, const CsvTable& table);

/// Throws InvalidArgument on malformed input or a missing n column.
CsvTable read_csv(std::istream& is);

/// Aligned plain-text rendering.
void write_pretty(std::ostream& os, const CsvTable& table);

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// Pulls numeric series out of a CSV table by column name; empty cells are skipped.
std::vector<Series> extract_series(const CsvTable& table, const std::vector<std::string>& columns);

struct ChartOptions {
  std::string title;
  std::string x_label = "n";
  bool normalize = false;  // scale each series to its own maximum
};

/// 800x500 static line chart, one polyline per series. Throws on no data.
std::string render_svg(const std::vector<Series>& series, const ChartOptions& options = {});

}  // namespace cchain
