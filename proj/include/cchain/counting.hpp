#pragma once

// Closed-form counts over (2^n, 2^(n+1)]:
//   gamma(n)  official plus non-official chain shapes of length n
//   delta(n)  lower bound on proper chains generated from generative seeds
// together with their ingredients (w, g, h, z) and the ratio lemma.

#include <cstdint>
#include <utility>
#include <vector>

#include "cchain/exactmath.hpp"

namespace cchain {

/// Number of length-n shapes satisfying 2^(n-1) > 3^alpha directly:
/// sum over x = 1..floor((n-1) log3 2) of C(n-1, x-1).
Count official_count(std::int64_t n);

/// Allowed movements of the s-th free function behind a (n-x)-comprehensive
/// core, for the non-official family indexed by (x, y). May be <= 0.
std::int64_t w_gamma(std::int64_t n, std::int64_t x, std::int64_t y, std::int64_t s);

struct GammaBreakdown {
  std::int64_t n = 0;
  Count term_official;            // directly satisfying shapes
  Count term_nonofficial_nofree;  // non-official shapes without free functions
  Count term_nonofficial_free;    // non-official shapes with free functions
  Count total;
};

GammaBreakdown gamma(std::int64_t n);

/// Largest concerned interval index K for n >= 7.
std::int64_t g_cap(std::int64_t n);

/// Largest number of free functions for interval K.
std::int64_t h_cap(std::int64_t n, std::int64_t K);

/// Allowed movements of free function s when q free functions sit in I_K.
std::int64_t z_moves(std::int64_t n, std::int64_t K, std::int64_t q, std::int64_t s);

struct DeltaTerm {
  std::int64_t K = 0;
  std::int64_t q = 0;
  std::vector<std::int64_t> bounds;  // z(q), z(q-1), ..., z(1)
  Count count;
};

struct DeltaBreakdown {
  std::int64_t n = 0;
  std::int64_t g = 0;
  std::vector<DeltaTerm> terms;
  Count total;
};

/// Zero for n < 7.
DeltaBreakdown delta(std::int64_t n);

struct RatioPair {
  std::int64_t n = 0;  // compares n against n+1
  Rational lhs;        // (gamma(n+1) + 2^n) / 2^(n+1)
  Rational rhs;        // (gamma(n) + 2^(n-1)) / 2^n
  bool holds = false;
  bool equal = false;
};

struct MonotonicityReport {
  std::vector<RatioPair> pairs;
  bool all_hold = true;
};

/// (gamma(n) + 2^(n-1)) / 2^n.
Rational gamma_ratio(std::int64_t n, const Count& count);

/// Checks the ratio lemma on each adjacent pair. Input must have consecutive n.
MonotonicityReport ratio_check(const std::vector<std::pair<std::int64_t, Count>>& gammas);

}  // namespace cchain
