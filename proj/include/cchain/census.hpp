#pragma once

// Brute-force counts over (2^n, 2^(n+1)], including the integer census that
// yields T(n). Work is split into partitions that run on worker threads;
// per-partition accumulators are merged in partition order, so results do
// not depend on the partition or thread count.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cchain/classify.hpp"
#include "cchain/counting.hpp"
#include "cchain/dynamics.hpp"

namespace cchain {

inline constexpr int kDefaultMaxN = 26;

struct CensusOptions {
  int partitions = 1;
  int threads = 0;            // 0: one per hardware thread
  int max_n = kDefaultMaxN;   // guard; raise explicitly for larger sweeps
};

struct ValueRange {
  Value lo = 0;  // inclusive
  Value hi = 0;  // inclusive

  friend bool operator==(const ValueRange&, const ValueRange&) = default;
};

/// Splits [lo, hi] into min(parts, hi - lo + 1) contiguous, ordered,
/// disjoint, nonempty ranges whose sizes differ by at most one.
std::vector<ValueRange> partition_range(Value lo, Value hi, int parts);

struct ShapeCensusReport {
  int n = 0;
  std::uint64_t official = 0;
  std::uint64_t non_official = 0;
  std::uint64_t unsatisfying = 0;

  std::uint64_t total() const { return official + non_official + unsatisfying; }
};

/// Classifies all 2^(n-1) BA-initial shapes of length n.
ShapeCensusReport shape_census(int n, const CensusOptions& options = {});

/// How T(n) is read off a census.
///   Exclusive: unsatisfying shapes whose trajectory descends (incidental).
///   Net:       all descending integers minus the official and non-official
///              shapes, i.e. descended - gamma(n).
enum class TAccounting { Exclusive, Net };

std::string_view to_string(TAccounting a);
TAccounting parse_accounting(std::string_view token);

struct CensusCounts {
  std::uint64_t official = 0;
  std::uint64_t non_official = 0;
  std::uint64_t incidental = 0;
  std::uint64_t unresolved = 0;
  std::uint64_t descended = 0;  // accepted by the predicate, any shape class

  std::uint64_t total() const { return official + non_official + incidental + unresolved; }
  CensusCounts& operator+=(const CensusCounts& o);
  friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

struct CensusReport {
  int n = 0;
  IncidencePredicate predicate;
  CensusCounts counts;
  std::uint64_t evens = 0;  // 2^(n-1) even integers, trivially descending
  std::chrono::duration<double> elapsed{0};
  int partition_count = 1;
  bool from_cache = false;

  std::int64_t t(TAccounting accounting) const;
};

/// Classifies every odd L in (2^n, 2^(n+1)] under pred.
CensusReport integer_census(int n, const IncidencePredicate& pred, const CensusOptions& options = {});

/// One scan producing the census for every predicate variant
/// (indexed like all_predicates()).
std::vector<CensusReport> integer_census_all(int n, const CensusOptions& options = {});

struct CalibrationVariant {
  IncidencePredicate predicate;
  TAccounting accounting = TAccounting::Exclusive;
  std::vector<std::int64_t> t_values;  // per row
  int matches = 0;
};

struct CalibrationRow {
  int n = 0;
  std::optional<std::int64_t> t_from_gamma_column;  // (gamma + T) - gamma
  std::optional<std::int64_t> t_column;
  bool reference_consistent = true;
};

struct CalibrationReport {
  std::vector<CalibrationRow> rows;
  std::vector<CalibrationVariant> variants;
  std::optional<std::size_t> best;  // index into variants; first among ties

  bool best_matches_all() const;
};

/// Scores every (predicate, accounting) variant against the reference T(n)
/// on [n_lo, n_hi]. An empty range gives an empty report.
CalibrationReport calibrate_predicate(int n_lo, int n_hi, const CensusOptions& options = {});

struct GenerativeReport {
  int n = 0;
  std::uint64_t g_count = 0;              // generative seeds
  std::uint64_t proper_in_range = 0;      // proper seeds landing odd in (2^n, 2^(n+1))
  std::uint64_t proper_unsatisfying = 0;  // proper seeds whose own chain is unsatisfying
  Count delta_formula;
  std::vector<std::uint64_t> per_interval_k;  // index K-1
};

/// 7 <= n <= max_n.
GenerativeReport generative_census(int n, const CensusOptions& options = {});

// ---------------------------------------------------------------------------

inline constexpr int kCacheSchemaVersion = 1;

/// JSON census records keyed by (n, predicate, tool version).
class CensusCache {
 public:
  explicit CensusCache(std::filesystem::path dir);

  /// CHAINC_CACHE_DIR, else ./.cchain-cache
  static std::filesystem::path default_dir();

  std::optional<CensusReport> load(int n, const IncidencePredicate& pred) const;
  void store(const CensusReport& report) const;
  std::filesystem::path path_for(int n, const IncidencePredicate& pred) const;

 private:
  std::filesystem::path dir_;
};

/// integer_census with cache lookup and store; cache may be null.
CensusReport cached_integer_census(int n, const IncidencePredicate& pred, const CensusOptions& options,
                                   const CensusCache* cache);

}  // namespace cchain
