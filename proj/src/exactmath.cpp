#include "cchain/exactmath.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <vector>

#include "cchain/error.hpp"

namespace cchain {
namespace {

using u128 = unsigned __int128;

// 2^x vs 3^y for x, y >= 0.
std::strong_ordering cmp_pow23_nonneg(std::int64_t x, std::int64_t y) {
  if (x <= 126 && y <= 79) {
    u128 two = u128{1} << x;
    u128 three = 1;
    for (std::int64_t i = 0; i < y; ++i) three *= 3;
    return two <=> three;
  }
  const Count two = Count{1} << static_cast<unsigned>(x);
  const Count three = boost::multiprecision::pow(Count{3}, static_cast<unsigned>(y));
  return two.compare(three) <=> 0;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const LinForm& f) {
  return os << "(" << f.a << " + " << f.b << "*log2(3))";
}

std::strong_ordering cmp_pow23(std::int64_t a, std::int64_t b) {
  // 2^a vs 3^b  <=>  2^a * 3^-b vs 1; mixed signs are decided immediately.
  if (a >= 0 && b >= 0) return cmp_pow23_nonneg(a, b);
  if (a >= 0 && b < 0) return std::strong_ordering::greater;
  if (a < 0 && b >= 0) return std::strong_ordering::less;
  return 0 <=> cmp_pow23_nonneg(-a, -b);
}

int sign(LinForm f) {
  const auto c = cmp_pow23(f.a, -f.b);
  if (c == std::strong_ordering::greater) return 1;
  if (c == std::strong_ordering::less) return -1;
  return 0;
}

std::int64_t floor_linfrac(LinForm num, LinForm den, Rounding mode) {
  if (sign(den) <= 0) {
    throw Error(Errc::NonPositiveDenominator, "denominator must be positive");
  }
  if (mode == Rounding::Ceil) return -floor_linfrac(-num, den, Rounding::Floor);

  const std::int64_t cap =
      4 * (std::abs(num.a) + std::abs(num.b) + std::abs(den.a) + std::abs(den.b)) + 8;
  // fits(k): num - k*den >= 0, nonincreasing in k.
  auto fits = [&](std::int64_t k) { return sign(num - k * den) >= 0; };

  std::int64_t lo = 0;  // fits(lo)
  std::int64_t hi = 0;  // !fits(hi)
  if (fits(0)) {
    std::int64_t step = 1;
    hi = 1;
    while (fits(hi)) {
      lo = hi;
      if (hi > cap) throw Error(Errc::QuotientOutOfRange, "quotient above search cap");
      step *= 2;
      hi = std::min(hi + step, cap + 1);
    }
  } else {
    std::int64_t step = 1;
    lo = -1;
    while (!fits(lo)) {
      hi = lo;
      if (lo < -cap) throw Error(Errc::QuotientOutOfRange, "quotient below search cap");
      step *= 2;
      lo = std::max(lo - step, -cap - 1);
    }
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::int64_t floor_mul_log32(std::int64_t m) {
  if (m < 0) throw Error(Errc::InvalidArgument, "floor_mul_log32 needs m >= 0");
  // m*log3(2) = m / lambda
  return floor_linfrac({m, 0}, {0, 1});
}

Count binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t isqrt(std::uint64_t v) {
  if (v < 2) return v;
  // Newton iteration from an upper bound; monotone decreasing to floor(sqrt(v)).
  std::uint64_t x = std::uint64_t{1} << ((64 - __builtin_clzll(v)) / 2 + 1);
  while (true) {
    const std::uint64_t y = (x + v / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

Count nested_nondecreasing_count(std::span<const std::int64_t> bounds) {
  if (bounds.empty()) return 1;
  if (std::any_of(bounds.begin(), bounds.end(), [](std::int64_t b) { return b < 1; })) return 0;

  // ways[v]: tuples over the positions seen so far whose last entry is v+1.
  std::vector<Count> ways(static_cast<std::size_t>(bounds[0]), Count{1});
  for (std::size_t i = 1; i < bounds.size(); ++i) {
    std::vector<Count> next(static_cast<std::size_t>(bounds[i]));
    Count running = 0;
    for (std::size_t v = 0; v < next.size(); ++v) {
      if (v < ways.size()) running += ways[v];
      next[v] = running;
    }
    ways = std::move(next);
  }
  Count total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

std::string to_string(const Count& c) { return c.str(); }

}  // namespace cchain
