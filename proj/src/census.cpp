#include "cchain/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <thread>

#include "cchain/error.hpp"
#include "cchain/reference.hpp"
#include "cchain/serialize.hpp"
#include "cchain/version.hpp"

namespace cchain {
namespace {

void check_guard(int n, int lo, const CensusOptions& options) {
  if (n < lo) throw Error(Errc::GuardExceeded, "n=" + std::to_string(n) + " below " + std::to_string(lo));
  if (n > options.max_n) {
    throw Error(Errc::GuardExceeded,
                "n=" + std::to_string(n) + " exceeds guard " + std::to_string(options.max_n));
  }
  if (n > 60) throw Error(Errc::GuardExceeded, "census supports n <= 60");
  if (options.partitions < 1) throw Error(Errc::InvalidArgument, "partitions must be >= 1");
}

int worker_count(const CensusOptions& options, std::size_t jobs) {
  int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(threads, 1);
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), jobs));
}

// Runs fn over each range on a small worker pool. Results come back in range
// order; the first failing range (by index) is rethrown.
template <class Acc, class Fn>
std::vector<Acc> run_partitions(const std::vector<ValueRange>& ranges, const CensusOptions& options, Fn fn) {
  std::vector<Acc> results(ranges.size());
  std::vector<std::exception_ptr> errors(ranges.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < ranges.size(); i = next++) {
      try {
        results[i] = fn(ranges[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int workers = worker_count(options, ranges.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

// Odd integers of (2^n, 2^(n+1)] are 2^n + 1 + 2i for i in [0, 2^(n-1)).
std::vector<ValueRange> odd_index_ranges(int n, int partitions) {
  return partition_range(0, pow2(static_cast<unsigned>(n - 1)) - 1, partitions);
}

// Per-partition tallies for every predicate variant at once.
struct MultiTally {
  std::uint64_t official = 0;
  std::uint64_t non_official = 0;
  std::vector<std::uint64_t> unsat_descended;
  std::vector<std::uint64_t> sat_descended;
  std::uint64_t unsatisfying = 0;
};

MultiTally tally_range(int n, const ValueRange& indices, const std::vector<IncidencePredicate>& preds,
                       const SatisfactionTable& table) {
  MultiTally t;
  t.unsat_descended.assign(preds.size(), 0);
  t.sat_descended.assign(preds.size(), 0);
  const Value base = pow2(static_cast<unsigned>(n)) + 1;
  for (Value i = indices.lo;; ++i) {
    const ChainFacts facts = chain_facts(base + 2 * i, n, table);
    const bool satisfying = facts.shape_class != ShapeClass::Unsatisfying;
    if (facts.shape_class == ShapeClass::Official) {
      ++t.official;
    } else if (facts.shape_class == ShapeClass::NonOfficial) {
      ++t.non_official;
    } else {
      ++t.unsatisfying;
    }
    for (std::size_t p = 0; p < preds.size(); ++p) {
      if (descends(preds[p], facts, n)) ++(satisfying ? t.sat_descended : t.unsat_descended)[p];
    }
    if (i == indices.hi) break;
  }
  return t;
}

std::vector<CensusReport> census_for(int n, const std::vector<IncidencePredicate>& preds,
                                     const CensusOptions& options) {
  check_guard(n, 3, options);
  const auto start = std::chrono::steady_clock::now();
  const SatisfactionTable table(n);
  const auto ranges = odd_index_ranges(n, options.partitions);
  const auto tallies = run_partitions<MultiTally>(
      ranges, options, [&](const ValueRange& r) { return tally_range(n, r, preds, table); });

  std::vector<CensusReport> reports(preds.size());
  for (std::size_t p = 0; p < preds.size(); ++p) {
    auto& rep = reports[p];
    rep.n = n;
    rep.predicate = preds[p];
    rep.evens = std::uint64_t{1} << (n - 1);
    rep.partition_count = static_cast<int>(ranges.size());
    for (const auto& t : tallies) {
      CensusCounts c;
      c.official = t.official;
      c.non_official = t.non_official;
      c.incidental = t.unsat_descended[p];
      c.unresolved = t.unsatisfying - t.unsat_descended[p];
      c.descended = t.unsat_descended[p] + t.sat_descended[p];
      rep.counts += c;
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  for (auto& rep : reports) rep.elapsed = elapsed;
  return reports;
}

}  // namespace

std::vector<ValueRange> partition_range(Value lo, Value hi, int parts) {
  if (lo > hi) throw Error(Errc::InvalidArgument, "partition_range needs lo <= hi");
  if (parts < 1) throw Error(Errc::InvalidArgument, "partition_range needs parts >= 1");
  const Value size = hi - lo + 1;  // hi - lo < max, so no wrap for census ranges
  const Value count = std::min<Value>(static_cast<Value>(parts), size);
  const Value base = size / count;
  const Value extra = size % count;
  std::vector<ValueRange> out;
  out.reserve(static_cast<std::size_t>(count));
  Value at = lo;
  for (Value k = 0; k < count; ++k) {
    const Value len = base + (k < extra ? 1 : 0);
    out.push_back({at, at + len - 1});
    at += len;
  }
  return out;
}

ShapeCensusReport shape_census(int n, const CensusOptions& options) {
  check_guard(n, 3, options);
  const SatisfactionTable table(n);
  struct Tally {
    std::uint64_t official = 0, non_official = 0, unsatisfying = 0;
  };
  const auto ranges = odd_index_ranges(n, options.partitions);
  const auto tallies = run_partitions<Tally>(ranges, options, [&](const ValueRange& r) {
    Tally t;
    for (auto bits = static_cast<std::uint64_t>(r.lo);; ++bits) {
      // Cell 1 is BA; bit (m-2) of bits marks cell m as BA.
      std::int64_t alpha = 1;
      bool prefix = table.holds(alpha, 1);
      for (int m = 2; m < n; ++m) {
        alpha += static_cast<std::int64_t>((bits >> (m - 2)) & 1);
        prefix = prefix || table.holds(alpha, m);
      }
      if (n > 1) alpha += static_cast<std::int64_t>((bits >> (n - 2)) & 1);
      if (table.holds(alpha, n)) {
        ++t.official;
      } else if (prefix) {
        ++t.non_official;
      } else {
        ++t.unsatisfying;
      }
      if (bits == static_cast<std::uint64_t>(r.hi)) break;
    }
    return t;
  });
  ShapeCensusReport report;
  report.n = n;
  for (const auto& t : tallies) {
    report.official += t.official;
    report.non_official += t.non_official;
    report.unsatisfying += t.unsatisfying;
  }
  return report;
}

std::string_view to_string(TAccounting a) { return a == TAccounting::Net ? "net" : "exclusive"; }

TAccounting parse_accounting(std::string_view token) {
  if (token == "net") return TAccounting::Net;
  if (token == "exclusive") return TAccounting::Exclusive;
  throw Error(Errc::InvalidArgument, "unknown T accounting: " + std::string(token));
}

CensusCounts& CensusCounts::operator+=(const CensusCounts& o) {
  official += o.official;
  non_official += o.non_official;
  incidental += o.incidental;
  unresolved += o.unresolved;
  descended += o.descended;
  return *this;
}

std::int64_t CensusReport::t(TAccounting accounting) const {
  if (accounting == TAccounting::Exclusive) return static_cast<std::int64_t>(counts.incidental);
  return static_cast<std::int64_t>(counts.descended) -
         static_cast<std::int64_t>(counts.official + counts.non_official);
}

CensusReport integer_census(int n, const IncidencePredicate& pred, const CensusOptions& options) {
  return census_for(n, {pred}, options).front();
}

std::vector<CensusReport> integer_census_all(int n, const CensusOptions& options) {
  return census_for(n, all_predicates(), options);
}

bool CalibrationReport::best_matches_all() const {
  if (!best) return false;
  const auto scored = std::count_if(rows.begin(), rows.end(), [](const CalibrationRow& r) { return r.t_column.has_value(); });
  return variants[*best].matches == scored;
}

CalibrationReport calibrate_predicate(int n_lo, int n_hi, const CensusOptions& options) {
  CalibrationReport report;
  if (n_lo > n_hi) return report;

  const auto preds = all_predicates();
  for (const auto& p : preds) {
    for (auto a : {TAccounting::Exclusive, TAccounting::Net}) report.variants.push_back({p, a, {}, 0});
  }
  for (int n = n_lo; n <= n_hi; ++n) {
    CalibrationRow row;
    row.n = n;
    if (const auto ref = reference::row(n)) {
      row.t_from_gamma_column = static_cast<std::int64_t>(ref->gamma_plus_t - ref->gamma);
      row.t_column = static_cast<std::int64_t>(ref->t);
      row.reference_consistent = *row.t_from_gamma_column == *row.t_column;
    }
    const auto censuses = integer_census_all(n, options);
    for (auto& v : report.variants) {
      const auto idx = static_cast<std::size_t>(std::find(preds.begin(), preds.end(), v.predicate) - preds.begin());
      const std::int64_t t = censuses[idx].t(v.accounting);
      v.t_values.push_back(t);
      if (row.t_column && t == *row.t_column && t == *row.t_from_gamma_column) ++v.matches;
    }
    report.rows.push_back(row);
  }
  for (std::size_t i = 0; i < report.variants.size(); ++i) {
    if (!report.best || report.variants[i].matches > report.variants[*report.best].matches) report.best = i;
  }
  return report;
}

GenerativeReport generative_census(int n, const CensusOptions& options) {
  check_guard(n, 7, options);
  const SatisfactionTable table(n);
  const Value lo_seed = generative_lower_bound(n) | 1;
  const Value hi_seed = pow2(static_cast<unsigned>(n)) - 1;
  const Value top = pow2(static_cast<unsigned>(n));

  struct Tally {
    std::uint64_t g = 0, proper = 0, proper_unsat = 0;
    std::vector<std::uint64_t> per_k;
  };
  const auto ranges = partition_range(0, (hi_seed - lo_seed) / 2, options.partitions);
  const auto tallies = run_partitions<Tally>(ranges, options, [&](const ValueRange& r) {
    Tally t;
    for (Value i = r.lo;; ++i) {
      const Value L = lo_seed + 2 * i;
      const Value next = ba_step(L);
      if (is_odd(next) && chain_facts(L, n, table).shape_class == ShapeClass::Unsatisfying) {
        ++t.g;
        const auto K = static_cast<std::size_t>(interval_index(L, n).value());
        if (t.per_k.size() < K) t.per_k.resize(K, 0);
        ++t.per_k[K - 1];
        if (next > top && next < 2 * top) {
          ++t.proper;
          if (chain_facts(next, n, table).shape_class == ShapeClass::Unsatisfying) ++t.proper_unsat;
        }
      }
      if (i == r.hi) break;
    }
    return t;
  });

  GenerativeReport report;
  report.n = n;
  for (const auto& t : tallies) {
    report.g_count += t.g;
    report.proper_in_range += t.proper;
    report.proper_unsatisfying += t.proper_unsat;
    if (report.per_interval_k.size() < t.per_k.size()) report.per_interval_k.resize(t.per_k.size(), 0);
    for (std::size_t k = 0; k < t.per_k.size(); ++k) report.per_interval_k[k] += t.per_k[k];
  }
  report.delta_formula = delta(n).total;
  return report;
}

// ---------------------------------------------------------------------------

CensusCache::CensusCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path CensusCache::default_dir() {
  if (const char* env = std::getenv("CHAINC_CACHE_DIR"); env && *env) return env;
  return ".cchain-cache";
}

std::filesystem::path CensusCache::path_for(int n, const IncidencePredicate& pred) const {
  return dir_ / ("census-n" + std::to_string(n) + "-" + to_token(pred) + "-v" + std::string(kToolVersion) + ".json");
}

std::optional<CensusReport> CensusCache::load(int n, const IncidencePredicate& pred) const {
  std::ifstream in(path_for(n, pred));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("schema_version").get<int>() != kCacheSchemaVersion) return std::nullopt;
    if (j.at("tool_version").get<std::string>() != kToolVersion) return std::nullopt;
    CensusReport r = census_from_json(j);
    if (r.n != n || !(r.predicate == pred)) return std::nullopt;
    r.from_cache = true;
    return r;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // unreadable records are recomputed
  }
}

void CensusCache::store(const CensusReport& report) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(Errc::Io, "cannot create cache dir " + dir_.string() + ": " + ec.message());
  const auto target = path_for(report.n, report.predicate);
  const auto tmp = std::filesystem::path(target).concat(".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw Error(Errc::Io, "cannot write " + tmp.string());
    out << to_json(report).dump(2) << '\n';
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw Error(Errc::Io, "cannot move cache record into place: " + ec.message());
}

CensusReport cached_integer_census(int n, const IncidencePredicate& pred, const CensusOptions& options,
                                   const CensusCache* cache) {
  if (cache) {
    check_guard(n, 3, options);
    if (auto hit = cache->load(n, pred)) return *hit;
  }
  CensusReport report = integer_census(n, pred, options);
  if (cache) cache->store(report);
  return report;
}

}  // namespace cchain
