#include "cchain/counting.hpp"

#include "cchain/classify.hpp"
#include "cchain/error.hpp"

namespace cchain {
namespace {

constexpr LinForm kLambdaMinusOne{-1, 1};

// ceil((n-1) log3 2)
std::int64_t ceil_mul_log32(std::int64_t m) { return floor_linfrac({m, 0}, {0, 1}, Rounding::Ceil); }

// Number of u-comprehensive shapes: C(beta-1, alpha-1).
Count comprehensive_count(std::int64_t u) {
  const UccParams p = ucc_params(u);
  return binomial(p.beta - 1, p.alpha - 1);
}

}  // namespace

Count official_count(std::int64_t n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "official_count needs n >= 2");
  Count sum = 0;
  const std::int64_t top = floor_mul_log32(n - 1);
  for (std::int64_t x = 1; x <= top; ++x) sum += binomial(n - 1, x - 1);
  return sum;
}

std::int64_t w_gamma(std::int64_t n, std::int64_t x, std::int64_t y, std::int64_t s) {
  const UccParams core = ucc_params(n - x);
  // wall = ceil((s + beta_core - 1 - alpha_core * lambda) / (lambda - 1))
  const std::int64_t wall = floor_linfrac({s + core.beta - 1, -core.alpha}, kLambdaMinusOne, Rounding::Ceil);
  return y + 1 - core.alpha - wall;
}

GammaBreakdown gamma(std::int64_t n) {
  if (n < 3) throw Error(Errc::InvalidArgument, "gamma needs n >= 3");
  GammaBreakdown out;
  out.n = n;
  out.term_official = official_count(n);

  const std::int64_t y_lo = ceil_mul_log32(n - 1);
  for (std::int64_t y = y_lo; y <= n - 2; ++y) out.term_nonofficial_nofree += comprehensive_count(n - y);

  std::vector<std::int64_t> bounds;
  for (std::int64_t y = y_lo; y <= n - 3; ++y) {
    for (std::int64_t x = y + 1; x <= n - 2; ++x) {
      const Count cores = comprehensive_count(n - x);
      if (cores == 0) continue;
      // e = x - y free functions; outermost bound w(e) first.
      bounds.clear();
      for (std::int64_t s = x - y; s >= 1; --s) bounds.push_back(w_gamma(n, x, y, s));
      out.term_nonofficial_free += cores * nested_nondecreasing_count(bounds);
    }
  }
  out.total = out.term_official + out.term_nonofficial_nofree + out.term_nonofficial_free;
  return out;
}

std::int64_t g_cap(std::int64_t n) {
  if (n < 7) throw Error(Errc::TooSmallN, "g(n) is defined for n >= 7");
  const std::int64_t p = n - floor_mul_log32(n - 1);
  const auto disc = static_cast<std::uint64_t>(p * p - 8);
  // floor((p + sqrt(D)) / 4) == floor((p + floor(sqrt(D))) / 4) for integer p.
  return (p + static_cast<std::int64_t>(isqrt(disc))) / 4;
}

std::int64_t h_cap(std::int64_t n, std::int64_t K) {
  if (K < 1) throw Error(Errc::InvalidArgument, "h(K) needs K >= 1");
  const std::int64_t ceil_ratio = K == 1 ? 0 : 1;  // ceil((K-1)/K)
  const std::int64_t whole = ceil_ratio + n - (2 * K + 1);
  // floor(whole - (n-1)/lambda) = floor((whole*lambda - (n-1)) / lambda)
  return floor_linfrac({-(n - 1), whole}, {0, 1});
}

std::int64_t z_moves(std::int64_t n, std::int64_t K, std::int64_t q, std::int64_t s) {
  // (s log3 2 - 1) / (1 - log3 2) == (s - lambda) / (lambda - 1)
  const std::int64_t shift = floor_linfrac({s, -1}, kLambdaMinusOne, Rounding::Ceil);
  // (x + sqrt(x^2)) / 2 == max(x, 0)
  return n - (2 * K + q + 1) - std::max<std::int64_t>(shift, 0);
}

DeltaBreakdown delta(std::int64_t n) {
  if (n < 3) throw Error(Errc::InvalidArgument, "delta needs n >= 3");
  DeltaBreakdown out;
  out.n = n;
  if (n < 7) return out;

  out.g = g_cap(n);
  out.total = out.g;
  for (std::int64_t K = 1; K <= out.g; ++K) {
    const std::int64_t h = h_cap(n, K);
    for (std::int64_t q = 1; q <= h; ++q) {
      DeltaTerm term;
      term.K = K;
      term.q = q;
      for (std::int64_t s = q; s >= 1; --s) term.bounds.push_back(z_moves(n, K, q, s));
      term.count = nested_nondecreasing_count(term.bounds);
      out.total += term.count;
      out.terms.push_back(std::move(term));
    }
  }
  return out;
}

Rational gamma_ratio(std::int64_t n, const Count& count) {
  const Count half = Count{1} << static_cast<unsigned>(n - 1);
  return Rational(count + half, half * 2);
}

MonotonicityReport ratio_check(const std::vector<std::pair<std::int64_t, Count>>& gammas) {
  MonotonicityReport report;
  for (std::size_t i = 0; i + 1 < gammas.size(); ++i) {
    const auto& [n, g] = gammas[i];
    const auto& [n_next, g_next] = gammas[i + 1];
    if (n_next != n + 1) throw Error(Errc::InvalidArgument, "ratio_check needs consecutive n");
    RatioPair pair;
    pair.n = n;
    pair.lhs = gamma_ratio(n_next, g_next);
    pair.rhs = gamma_ratio(n, g);
    pair.holds = pair.lhs >= pair.rhs;
    pair.equal = pair.lhs == pair.rhs;
    report.all_hold = report.all_hold && pair.holds;
    report.pairs.push_back(std::move(pair));
  }
  return report;
}

}  // namespace cchain
