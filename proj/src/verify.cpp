#include "cchain/verify.hpp"

#include <random>

#include "cchain/counting.hpp"
#include "cchain/error.hpp"

namespace cchain {

Theorem1Suite verify_theorem1(std::uint64_t trials, int max_z, std::uint64_t seed) {
  if (max_z < 1 || max_z > 62) throw Error(Errc::InvalidArgument, "max_z must be in [1, 62]");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_z(1, max_z);
  Theorem1Suite suite;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const int z = pick_z(rng);
    const std::uint64_t odd_count = std::uint64_t{1} << (z - 1);
    const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(0, odd_count - 1)(rng);
    const Value L = 2 * static_cast<Value>(k) + 1;
    auto result = theorem1_check(L, z);
    ++suite.trials;
    if (!result.passed) {
      ++suite.failures;
      if (suite.counterexamples.size() < 5) suite.counterexamples.push_back(std::move(result));
    }
  }
  return suite;
}

Theorem2Result verify_theorem2(int n) {
  if (n < 1 || n > 26) throw Error(Errc::GuardExceeded, "verify_theorem2 supports 1 <= n <= 26");
  Theorem2Result r;
  r.n = n;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::vector<bool> seen(count, false);
  const Value base = pow2(static_cast<unsigned>(n));
  for (std::uint64_t i = 0; i < count; ++i) {
    const Value L = base + 1 + 2 * static_cast<Value>(i);
    const ChainTrace trace = extract_chain(L, n);
    ++r.integers;
    const std::uint64_t bits = trace.shape.tail_bits();
    if (seen[bits]) {
      if (!r.witness) r.witness = "shape " + shape_string(trace.shape) + " repeated at L=" + to_string(L);
    } else {
      seen[bits] = true;
      ++r.distinct_shapes;
    }
    try {
      if (invert_shape(trace.shape, n) != L) {
        ++r.inverse_failures;
        if (!r.witness) r.witness = "invert_shape(" + shape_string(trace.shape) + ") != " + to_string(L);
      }
    } catch (const Error& e) {
      ++r.inverse_failures;
      if (!r.witness) r.witness = e.what();
    }
  }
  return r;
}

GammaOracleReport gamma_oracle(int n_lo, int n_hi, const CensusOptions& options) {
  GammaOracleReport report;
  for (int n = n_lo; n <= n_hi; ++n) {
    auto census = shape_census(n, options);
    Count formula = gamma(n).total;
    const std::uint64_t enumerated = census.official + census.non_official;
    if (formula != enumerated) report.mismatches.push_back({n, formula, enumerated});
    report.censuses.push_back(census);
    report.formula.push_back(std::move(formula));
  }
  return report;
}

}  // namespace cchain
