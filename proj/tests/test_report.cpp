#include "doctest.h"

#include <sstream>

#include "cchain/counting.hpp"
#include "cchain/error.hpp"
#include "cchain/reference.hpp"
#include "cchain/report.hpp"

using namespace cchain;

TEST_CASE("format_fixed truncates exact binary fractions") {
  CHECK(format_fixed(Rational(5, 8)) == "0.625000000000");
  CHECK(format_fixed(Rational(7213, 8192)) == "0.880493164062");
  CHECK(format_fixed(Rational(3, 2), 2) == "1.50");
  CHECK(format_fixed(Rational(7), 0) == "7");
  CHECK_THROWS_AS(format_fixed(Rational(-1, 2)), Error);
}

TEST_CASE("ratio columns match the reference strings") {
  for (const auto& ref : reference::kRows) {
    TableRow row;
    row.n = ref.n;
    row.gamma = cchain::gamma(ref.n).total;
    row.t = static_cast<std::int64_t>(ref.t);
    row.delta = delta(ref.n).total;
    fill_ratios(row);
    REQUIRE(row.ratio_gamma == std::string(ref.ratio_gamma));
    REQUIRE(row.ratio_gamma_t == std::string(ref.ratio_gamma_t));
    REQUIRE(row.t_over_delta.has_value() == (ref.delta > 0));
  }
}

TEST_CASE("csv round-trip") {
  std::vector<TableRow> rows;
  for (int n = 3; n <= 14; ++n) {
    TableRow r;
    r.n = n;
    r.delta = delta(n).total;
    if (n % 2) r.gamma = cchain::gamma(n).total;
    fill_ratios(r);
    rows.push_back(r);
  }
  const auto table = to_csv(rows);
  std::stringstream ss;
  write_csv(ss, table);
  const auto back = read_csv(ss);
  CHECK(back.header == table.header);
  CHECK(back.rows == table.rows);
  CHECK(back.rows.back()[*back.column("delta")] == "64");
  CHECK(back.rows.back()[*back.column("gamma")].empty());

  const auto series = extract_series(back, {"delta"});
  REQUIRE(series.size() == 1);
  CHECK(series[0].points.back() == std::pair<double, double>{14, 64});
  CHECK_THROWS_AS(extract_series(back, {"nope"}), Error);
}

TEST_CASE("csv quoting and malformed input") {
  CsvTable t;
  t.header = {"n", "label"};
  t.rows = {{"1", "a,b"}, {"2", "say \"hi\""}};
  std::stringstream ss;
  write_csv(ss, t);
  CHECK(read_csv(ss).rows == t.rows);

  std::stringstream empty;
  CHECK_THROWS_AS(read_csv(empty), Error);
  std::stringstream ragged("n,x\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(ragged), Error);
  std::stringstream no_n("a,b\n1,2\n");
  CHECK_THROWS_AS(read_csv(no_n), Error);
  std::stringstream text("n,x\n1,abc\n");
  const auto parsed = read_csv(text);
  CHECK_THROWS_AS(extract_series(parsed, {"x"}), Error);
}

TEST_CASE("pretty output aligns columns") {
  CsvTable t;
  t.header = {"n", "gamma"};
  t.rows = {{"3", "1"}, {"25", "15415312"}};
  std::stringstream ss;
  write_pretty(ss, t);
  const auto s = ss.str();
  CHECK(s.find("15415312") != std::string::npos);
  CHECK(s.find("gamma") != std::string::npos);
}

TEST_CASE("svg chart") {
  Series d{"delta", {{3, 0}, {7, 1}, {14, 64}}};
  Series t{"t", {{3, 0}, {14, 257}}};
  const auto svg = render_svg({d, t}, {"delta and T", "n", false});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("viewBox=\"0 0 800 500\"") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("delta and T") != std::string::npos);
  CHECK(render_svg({d}, {"", "n", true}) != render_svg({d}, {"", "n", false}));
  CHECK_THROWS_AS(render_svg({}), Error);
  CHECK_THROWS_AS(render_svg({Series{"empty", {}}}), Error);
}
