#pragma once

// Executable property suites over chains and shape counts.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cchain/census.hpp"
#include "cchain/chains.hpp"

namespace cchain {

struct Theorem1Suite {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::vector<Theorem1Result> counterexamples;  // first few failures, with traces
};

/// Random (L, z) pairs: z uniform in [1, max_z], L uniform odd below 2^z.
Theorem1Suite verify_theorem1(std::uint64_t trials, int max_z, std::uint64_t seed);

struct Theorem2Result {
  int n = 0;
  std::uint64_t integers = 0;       // odd integers in (2^n, 2^(n+1)]
  std::uint64_t distinct_shapes = 0;
  std::uint64_t inverse_failures = 0;
  std::optional<std::string> witness;  // first collision or inversion failure

  bool passed() const { return witness == std::nullopt && distinct_shapes == integers; }
};

/// Checks that odd L -> shape(C_n(L)) is a bijection onto all BA-initial
/// shapes and that invert_shape undoes it. n <= 26.
Theorem2Result verify_theorem2(int n);

struct GammaMismatch {
  int n = 0;
  Count formula;
  std::uint64_t enumerated = 0;  // official + non-official shapes
};

struct GammaOracleReport {
  std::vector<ShapeCensusReport> censuses;
  std::vector<Count> formula;
  std::vector<GammaMismatch> mismatches;
};

/// gamma(n) against shape_census for n in [n_lo, n_hi]; every difference is recorded.
GammaOracleReport gamma_oracle(int n_lo, int n_hi, const CensusOptions& options = {});

}  // namespace cchain
