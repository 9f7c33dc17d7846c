// cchain command-line front end.
//
// Exit status: 0 success, 1 domain or guard error, 2 property violation,
// 3 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>
#include <string>
#include <vector>

#include "cchain/census.hpp"
#include "cchain/counting.hpp"
#include "cchain/error.hpp"
#include "cchain/report.hpp"
#include "cchain/serialize.hpp"
#include "cchain/verify.hpp"
#include "cchain/version.hpp"

using namespace cchain;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitProperty = 2;
constexpr int kExitIo = 3;

constexpr int kFormulaMaxN = 64;

struct Global {
  std::string format = "csv";
  std::string cache_dir;
  bool no_cache = false;
  int threads = 0;
  int partitions = 0;  // 0: four per worker thread
  int unsafe_max_n = 0;
  bool verbose = false;
};

struct RangeArgs {
  std::optional<int> n;
  std::optional<int> n_min;
  std::optional<int> n_max;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--n", n, "single n");
    cmd->add_option("--n-min", n_min, "first n");
    cmd->add_option("--n-max", n_max, "last n");
  }

  std::pair<int, int> resolve(int default_lo, int default_hi) const {
    if (n) return {*n, *n};
    const int lo = n_min.value_or(default_lo);
    return {lo, n_max.value_or(n_min && !n_max ? std::max(lo, default_hi) : default_hi)};
  }
};

void check_range(std::pair<int, int> r, int domain_lo, int guard) {
  if (r.first < domain_lo) {
    throw Error(Errc::RangeError, "n=" + std::to_string(r.first) + " is below " + std::to_string(domain_lo));
  }
  if (r.first > r.second) throw Error(Errc::RangeError, "empty n range");
  if (r.second > guard) {
    throw Error(Errc::GuardExceeded,
                "n=" + std::to_string(r.second) + " exceeds guard " + std::to_string(guard) + " (see --unsafe-max-n)");
  }
}

CensusOptions census_options(const Global& g) {
  CensusOptions o;
  o.threads = g.threads;
  const int workers = g.threads > 0 ? g.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  o.partitions = g.partitions > 0 ? g.partitions : 4 * workers;
  if (g.unsafe_max_n > 0) o.max_n = g.unsafe_max_n;
  return o;
}

int formula_guard(const Global& g) { return g.unsafe_max_n > 0 ? g.unsafe_max_n : kFormulaMaxN; }

std::unique_ptr<CensusCache> make_cache(const Global& g) {
  if (g.no_cache) return nullptr;
  return std::make_unique<CensusCache>(g.cache_dir.empty() ? CensusCache::default_dir() : std::filesystem::path(g.cache_dir));
}

void emit_table(const Global& g, const CsvTable& table, const json& j) {
  if (g.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else if (g.format == "pretty") {
    write_pretty(std::cout, table);
  } else {
    write_csv(std::cout, table);
  }
}

std::int64_t census_t(int n, const Global& g, const IncidencePredicate& pred, TAccounting acc) {
  const auto cache = make_cache(g);
  const auto report = cached_integer_census(n, pred, census_options(g), cache.get());
  if (g.verbose) {
    std::cerr << "census n=" << n << (report.from_cache ? " (cached)" : "") << " t=" << report.t(acc) << '\n';
  }
  return report.t(acc);
}

// ---------------------------------------------------------------------------

int cmd_gamma(const Global& g, const RangeArgs& range, bool with_t, const std::string& predicate,
              const std::string& t_mode) {
  const auto r = range.resolve(3, 25);
  check_range(r, 3, formula_guard(g));
  const auto pred = parse_predicate(predicate);
  const auto acc = parse_accounting(t_mode);
  std::vector<TableRow> rows;
  json j = json::array();
  for (int n = r.first; n <= r.second; ++n) {
    const auto b = cchain::gamma(n);
    TableRow row;
    row.n = n;
    row.gamma = b.total;
    if (with_t) row.t = census_t(n, g, pred, acc);
    fill_ratios(row);
    json entry = to_json(b);
    entry["ratio_gamma"] = *row.ratio_gamma;
    if (row.t) {
      entry["t"] = *row.t;
      entry["ratio_gamma_t"] = *row.ratio_gamma_t;
    }
    j.push_back(entry);
    rows.push_back(row);
  }
  auto table = to_csv(rows);
  std::vector<std::string> keep{"n", "gamma", "ratio_gamma"};
  if (with_t) keep = {"n", "gamma", "t", "ratio_gamma", "ratio_gamma_t"};
  CsvTable out;
  out.header = keep;
  for (const auto& row : table.rows) {
    std::vector<std::string> fields;
    for (const auto& name : keep) fields.push_back(row[*table.column(name)]);
    out.rows.push_back(fields);
  }
  emit_table(g, out, j);
  return kExitOk;
}

int cmd_delta(const Global& g, const RangeArgs& range, bool with_t, const std::string& predicate,
              const std::string& t_mode) {
  const auto r = range.resolve(3, 25);
  check_range(r, 3, formula_guard(g));
  const auto pred = parse_predicate(predicate);
  const auto acc = parse_accounting(t_mode);
  CsvTable out;
  out.header = {"n", "delta"};
  if (with_t) out.header = {"n", "delta", "t", "t_over_delta"};
  json j = json::array();
  for (int n = r.first; n <= r.second; ++n) {
    const auto d = delta(n);
    TableRow row;
    row.n = n;
    row.delta = d.total;
    if (with_t) row.t = census_t(n, g, pred, acc);
    fill_ratios(row);
    std::vector<std::string> fields{std::to_string(n), to_string(d.total)};
    if (with_t) {
      fields.push_back(std::to_string(*row.t));
      fields.push_back(row.t_over_delta.value_or(""));
    }
    out.rows.push_back(fields);
    json entry = to_json(d);
    if (row.t) entry["t"] = *row.t;
    j.push_back(entry);
    if (g.verbose && g.format != "json") {
      std::cerr << "delta(" << n << ") = " << d.g;
      for (const auto& t : d.terms) std::cerr << " + " << to_string(t.count);
      std::cerr << " = " << to_string(d.total) << '\n';
      for (const auto& t : d.terms) {
        std::cerr << "  K=" << t.K << " q=" << t.q << " bounds=[";
        for (std::size_t i = 0; i < t.bounds.size(); ++i) std::cerr << (i ? "," : "") << t.bounds[i];
        std::cerr << "] count=" << to_string(t.count) << '\n';
      }
    }
  }
  emit_table(g, out, j);
  return kExitOk;
}

int cmd_census(const Global& g, const RangeArgs& range, const std::string& predicate, const std::string& t_mode) {
  const auto opts = census_options(g);
  const auto r = range.resolve(3, 12);
  check_range(r, 3, opts.max_n);
  const auto pred = parse_predicate(predicate);
  const auto acc = parse_accounting(t_mode);
  const auto cache = make_cache(g);
  std::vector<CensusReport> reports;
  json j = json::array();
  for (int n = r.first; n <= r.second; ++n) {
    reports.push_back(cached_integer_census(n, pred, opts, cache.get()));
    json entry = to_json(reports.back());
    entry["from_cache"] = reports.back().from_cache;
    j.push_back(entry);
    if (g.verbose) {
      std::cerr << "census n=" << n << " " << reports.back().elapsed.count() << "s"
                << (reports.back().from_cache ? " (cached)" : "") << '\n';
    }
  }
  emit_table(g, to_csv(reports, acc), j);
  return kExitOk;
}

int cmd_calibrate(const Global& g, const RangeArgs& range) {
  const auto opts = census_options(g);
  const auto r = range.resolve(3, 16);
  if (r.first <= r.second) check_range(r, 3, opts.max_n);
  const auto report = calibrate_predicate(r.first, r.second, opts);
  CsvTable out;
  out.header = {"predicate", "accounting", "matches", "rows"};
  for (const auto& v : report.variants) {
    std::string ts;
    for (std::size_t i = 0; i < v.t_values.size(); ++i) ts += (i ? " " : "") + std::to_string(v.t_values[i]);
    out.rows.push_back({to_token(v.predicate), std::string(to_string(v.accounting)), std::to_string(v.matches), ts});
  }
  emit_table(g, out, to_json(report));
  if (g.format != "json" && report.best) {
    const auto& best = report.variants[*report.best];
    std::cerr << "best: " << to_token(best.predicate) << " / " << to_string(best.accounting) << " matches "
              << best.matches << " of " << report.rows.size() << " rows\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      const auto& row = report.rows[i];
      if (row.t_column && *row.t_column != best.t_values[i]) {
        std::cerr << "  n=" << row.n << " census " << best.t_values[i] << " table " << *row.t_column << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_generative(const Global& g, const RangeArgs& range) {
  const auto opts = census_options(g);
  const auto r = range.resolve(7, 16);
  check_range(r, 7, opts.max_n);
  CsvTable out;
  out.header = {"n", "g_count", "proper_in_range", "proper_unsatisfying", "delta", "per_interval_k"};
  json j = json::array();
  for (int n = r.first; n <= r.second; ++n) {
    const auto rep = generative_census(n, opts);
    std::string per_k;
    for (std::size_t k = 0; k < rep.per_interval_k.size(); ++k) {
      per_k += (k ? " " : "") + std::to_string(rep.per_interval_k[k]);
    }
    out.rows.push_back({std::to_string(n), std::to_string(rep.g_count), std::to_string(rep.proper_in_range),
                        std::to_string(rep.proper_unsatisfying), to_string(rep.delta_formula), per_k});
    j.push_back(to_json(rep));
  }
  emit_table(g, out, j);
  return kExitOk;
}

int cmd_verify(const Global& g, const std::string& theorem, const RangeArgs& range, std::uint64_t trials, int max_z,
               std::uint64_t seed) {
  if (theorem == "1" || theorem == "periodicity") {
    const auto s = verify_theorem1(trials, max_z, seed);
    std::cout << "periodicity: " << s.trials << " trials, " << s.failures << " failures\n";
    for (const auto& c : s.counterexamples) {
      std::cout << "  L=" << to_string(c.base.start) << " shifted=" << to_string(c.shifted.start) << ": " << c.failure
                << "\n    " << shape_string(c.base.shape) << " vs " << shape_string(c.shifted.shape) << '\n';
    }
    return s.failures == 0 ? kExitOk : kExitProperty;
  }
  if (theorem == "2" || theorem == "uniqueness") {
    const auto r = range.resolve(1, 16);
    check_range(r, 1, g.unsafe_max_n > 0 ? g.unsafe_max_n : kDefaultMaxN);
    bool ok = true;
    for (int n = r.first; n <= r.second; ++n) {
      const auto res = verify_theorem2(n);
      std::cout << "uniqueness n=" << n << ": " << res.distinct_shapes << " shapes <-> " << res.integers
                << " integers" << (res.passed() ? "" : " FAILED") << '\n';
      if (res.witness) std::cout << "  witness: " << *res.witness << '\n';
      ok = ok && res.passed();
    }
    return ok ? kExitOk : kExitProperty;
  }
  if (theorem == "ratio-lemma") {
    const auto r = range.resolve(3, 25);
    check_range(r, 3, formula_guard(g));
    std::vector<std::pair<std::int64_t, Count>> seq;
    for (int n = r.first; n <= r.second; ++n) seq.emplace_back(n, cchain::gamma(n).total);
    const auto rep = ratio_check(seq);
    for (const auto& p : rep.pairs) {
      std::cout << "n=" << p.n << "->" << p.n + 1 << ": " << format_fixed(p.rhs) << " <= " << format_fixed(p.lhs)
                << (p.holds ? "" : " VIOLATED") << '\n';
    }
    return rep.all_hold ? kExitOk : kExitProperty;
  }
  if (theorem == "gamma-oracle") {
    const auto opts = census_options(g);
    const auto r = range.resolve(3, 20);
    check_range(r, 3, opts.max_n);
    const auto rep = gamma_oracle(r.first, r.second, opts);
    for (std::size_t i = 0; i < rep.censuses.size(); ++i) {
      const auto& c = rep.censuses[i];
      std::cout << "n=" << c.n << ": formula " << to_string(rep.formula[i]) << ", shapes "
                << c.official + c.non_official << '\n';
    }
    for (const auto& m : rep.mismatches) {
      std::cout << "mismatch n=" << m.n << ": formula " << to_string(m.formula) << " enumerated " << m.enumerated
                << '\n';
    }
    return rep.mismatches.empty() ? kExitOk : kExitProperty;
  }
  throw Error(Errc::InvalidArgument, "unknown theorem '" + theorem + "' (1, 2, periodicity, uniqueness, ratio-lemma, gamma-oracle)");
}

int cmd_plot(const std::string& input, const std::string& output, const std::vector<std::string>& series,
             const std::string& title, bool normalize) {
  std::ifstream in(input);
  if (!in) throw Error(Errc::Io, "cannot read " + input);
  const auto table = read_csv(in);
  std::vector<std::string> names = series;
  if (names.empty()) {
    for (const auto& h : table.header) {
      if (h != "n") names.push_back(h);
    }
  }
  const auto svg = render_svg(extract_series(table, names), {title, "n", normalize});
  if (output.empty() || output == "-") {
    std::cout << svg;
    return kExitOk;
  }
  std::ofstream out(output);
  if (!out) throw Error(Errc::Io, "cannot write " + output);
  out << svg;
  if (!out) throw Error(Errc::Io, "write failed: " + output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collatz chain counts, censuses and property checks"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json", "pretty"}));
  app.add_option("--cache-dir", g.cache_dir, "census cache directory (default $CHAINC_CACHE_DIR or .cchain-cache)");
  app.add_flag("--no-cache", g.no_cache, "neither read nor write the census cache");
  app.add_option("--threads", g.threads, "worker threads (0: hardware concurrency)")->check(CLI::NonNegativeNumber);
  app.add_option("--partitions", g.partitions, "census range partitions")->check(CLI::NonNegativeNumber);
  app.add_option("--unsafe-max-n", g.unsafe_max_n, "raise the n guard")->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", g.verbose, "breakdowns and timings on stderr");

  std::string predicate = to_token(calibrated_predicate());
  std::string t_mode = "net";
  auto add_census_flags = [&](CLI::App* cmd) {
    cmd->add_option("--predicate", predicate, "incidence predicate token");
    cmd->add_option("--t-mode", t_mode, "T accounting")->check(CLI::IsMember({"net", "exclusive"}));
  };

  RangeArgs range;
  bool with_t = false;

  auto* gamma_cmd = app.add_subcommand("gamma", "gamma(n) with ratio columns");
  range.add_to(gamma_cmd);
  gamma_cmd->add_flag("--with-t", with_t, "add census T(n) and the gamma+T ratio");
  add_census_flags(gamma_cmd);

  auto* delta_cmd = app.add_subcommand("delta", "delta(n), per (K,q) terms with --verbose");
  range.add_to(delta_cmd);
  delta_cmd->add_flag("--with-t", with_t, "add census T(n) and T/delta");
  add_census_flags(delta_cmd);

  auto* census_cmd = app.add_subcommand("census", "classify every odd integer in (2^n, 2^(n+1)]");
  range.add_to(census_cmd);
  add_census_flags(census_cmd);

  auto* calibrate_cmd = app.add_subcommand("calibrate", "score predicate variants against tabulated T(n)");
  range.add_to(calibrate_cmd);

  auto* generative_cmd = app.add_subcommand("generative", "generative seeds and proper successors");
  range.add_to(generative_cmd);

  std::string theorem;
  std::uint64_t trials = 10000;
  int max_z = 30;
  std::uint64_t seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  verify_cmd->add_option("--theorem", theorem, "1 (periodicity), 2 (uniqueness), ratio-lemma or gamma-oracle")->required();
  range.add_to(verify_cmd);
  verify_cmd->add_option("--trials", trials, "periodicity trials");
  verify_cmd->add_option("--max-z", max_z, "largest z for periodicity trials");
  verify_cmd->add_option("--seed", seed, "random seed");

  std::string input;
  std::string output;
  std::vector<std::string> series;
  std::string title;
  bool normalize = false;
  auto* plot_cmd = app.add_subcommand("plot", "SVG line chart from a CSV table");
  plot_cmd->add_option("--input", input, "CSV file")->required();
  plot_cmd->add_option("--output", output, "SVG file (default stdout)");
  plot_cmd->add_option("--series", series, "columns to draw (default all)")->delimiter(',');
  plot_cmd->add_option("--title", title, "chart title");
  plot_cmd->add_flag("--normalize", normalize, "scale each series to its maximum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (*gamma_cmd) return cmd_gamma(g, range, with_t, predicate, t_mode);
    if (*delta_cmd) return cmd_delta(g, range, with_t, predicate, t_mode);
    if (*census_cmd) return cmd_census(g, range, predicate, t_mode);
    if (*calibrate_cmd) return cmd_calibrate(g, range);
    if (*generative_cmd) return cmd_generative(g, range);
    if (*verify_cmd) return cmd_verify(g, theorem, range, trials, max_z, seed);
    if (*plot_cmd) return cmd_plot(input, output, series, title, normalize);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::Io ? kExitIo : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitDomain;
}
