#pragma once

// Exact arithmetic for expressions in lambda = log2(3).
//
// Every floor or ceiling in the counting formulas is a floor of a quotient
// of two linear forms a + b*lambda. Such quotients are decided exactly by
// comparing powers of two and three, so no floating point is involved.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cchain {

// Arbitrary-precision nonnegative count (gamma, delta, T, binomials).
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The real number a + b*log2(3), held exactly.
struct LinForm {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend constexpr bool operator==(const LinForm&, const LinForm&) = default;

  friend constexpr LinForm operator+(LinForm x, LinForm y) { return {x.a + y.a, x.b + y.b}; }
  friend constexpr LinForm operator-(LinForm x, LinForm y) { return {x.a - y.a, x.b - y.b}; }
  friend constexpr LinForm operator-(LinForm x) { return {-x.a, -x.b}; }
  friend constexpr LinForm operator*(std::int64_t k, LinForm x) { return {k * x.a, k * x.b}; }
};

std::ostream& operator<<(std::ostream& os, const LinForm& f);

enum class Rounding { Floor, Ceil };

/// Compares 2^a against 3^b for signed exponents. Equal only when a = b = 0.
std::strong_ordering cmp_pow23(std::int64_t a, std::int64_t b);

/// Sign of a + b*lambda: -1, 0 or +1.
int sign(LinForm f);

/// floor(num/den) or ceil(num/den); den must be strictly positive.
///
/// The quotient is bracketed by exponential then binary search on the sign
/// of num - k*den. The search is capped at |k| <= 4*(|a|+|b|+|c|+|d|) + 8;
/// a quotient beyond that raises QuotientOutOfRange.
std::int64_t floor_linfrac(LinForm num, LinForm den, Rounding mode = Rounding::Floor);

/// floor(m * log3(2)): the k with 3^k <= 2^m < 3^(k+1).
std::int64_t floor_mul_log32(std::int64_t m);

/// C(n, k), zero whenever k < 0, k > n or n < 0.
Count binomial(std::int64_t n, std::int64_t k);

/// floor(sqrt(v)).
std::uint64_t isqrt(std::uint64_t v);

/// Number of tuples 1 <= r_1 <= r_2 <= ... <= r_e with r_i <= bounds[i].
///
/// bounds[0] bounds the outermost sum. An empty sequence counts the empty
/// tuple once; a nonpositive bound anywhere yields zero.
Count nested_nondecreasing_count(std::span<const std::int64_t> bounds);

/// Decimal rendering of a count.
std::string to_string(const Count& c);

}  // namespace cchain
