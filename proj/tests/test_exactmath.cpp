#include "doctest.h"

#include <functional>
#include <vector>

#include "cchain/error.hpp"
#include "cchain/exactmath.hpp"
#include "oracles.hpp"

using namespace cchain;

TEST_CASE("cmp_pow23 examples") {
  CHECK(cmp_pow23(0, 0) == std::strong_ordering::equal);
  CHECK(cmp_pow23(3, 2) == std::strong_ordering::less);
  CHECK(cmp_pow23(19, 12) == std::strong_ordering::less);
  CHECK(cmp_pow23(2, 1) == std::strong_ordering::greater);
  CHECK(cmp_pow23(-1, -1) == std::strong_ordering::greater);
}

TEST_CASE("cmp_pow23 agrees with big-integer powers") {
  for (std::int64_t a = -64; a <= 64; ++a) {
    for (std::int64_t b = -64; b <= 64; ++b) {
      REQUIRE(cmp_pow23(a, b) == oracle::cmp_pow23(a, b));
    }
  }
  CHECK(cmp_pow23(400, 252) == oracle::cmp_pow23(400, 252));
  CHECK(cmp_pow23(-317, -200) == oracle::cmp_pow23(-317, -200));
}

TEST_CASE("floor_linfrac examples") {
  CHECK(floor_linfrac({-1, 3}, {-1, 1}) == 6);
  CHECK(floor_linfrac({2, 0}, {-1, 1}) == 3);
  CHECK(floor_linfrac({0, 0}, {1, 0}) == 0);
  CHECK(floor_linfrac({7, 0}, {2, 0}) == 3);
  CHECK(floor_linfrac({-7, 0}, {2, 0}) == -4);
  CHECK(floor_linfrac({-7, 0}, {2, 0}, Rounding::Ceil) == -3);
}

TEST_CASE("floor_linfrac errors") {
  CHECK_THROWS_AS(floor_linfrac({1, 0}, {0, 0}), Error);
  CHECK_THROWS_AS(floor_linfrac({1, 0}, {1, -1}), Error);
  try {
    floor_linfrac({1, 0}, {-2, 0});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPositiveDenominator);
  }
}

TEST_CASE("floor_linfrac matches linear scan oracle") {
  const std::vector<std::pair<std::int64_t, std::int64_t>> dens{{-1, 1}, {0, 1}, {1, 0}, {3, -1}, {2, 1}};
  for (const auto& [c, d] : dens) {
    for (std::int64_t a = -9; a <= 9; ++a) {
      for (std::int64_t b = -6; b <= 6; ++b) {
        const auto f = floor_linfrac({a, b}, {c, d});
        REQUIRE(f == oracle::floor_linfrac(a, b, c, d, 200));
        REQUIRE(floor_linfrac({a, b}, {c, d}, Rounding::Ceil) == -floor_linfrac({-a, -b}, {c, d}));
      }
    }
  }
}

TEST_CASE("floor_mul_log32 examples and oracle up to 200") {
  CHECK(floor_mul_log32(0) == 0);
  CHECK(floor_mul_log32(24) == 15);
  CHECK(floor_mul_log32(2) == 1);
  for (std::int64_t m = 0; m <= 200; ++m) {
    REQUIRE(floor_mul_log32(m) == oracle::floor_mul_log32(m));
    if (m >= 1) REQUIRE(floor_mul_log32(m) < m);
  }
  CHECK_THROWS_AS(floor_mul_log32(-1), Error);
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 0) == 1);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(-1, 0) == 0);
  Count row = 0;
  for (int k = 0; k <= 5; ++k) row += binomial(5, k);
  CHECK(row == 32);
  CHECK(to_string(binomial(100, 50)) == "100891344545564193334812497256");
}

TEST_CASE("isqrt") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(8) == 2);
  CHECK(isqrt(16) == 4);
  for (std::uint64_t v = 0; v < 5000; ++v) {
    const auto r = isqrt(v);
    REQUIRE(r * r <= v);
    REQUIRE((r + 1) * (r + 1) > v);
  }
  CHECK(isqrt(~std::uint64_t{0}) == 4294967295u);
}

TEST_CASE("nested_nondecreasing_count examples") {
  CHECK(nested_nondecreasing_count({}) == 1);
  const std::vector<std::int64_t> ten{10}, pair{8, 9}, zero{0}, neg{3, -1};
  CHECK(nested_nondecreasing_count(ten) == 10);
  CHECK(nested_nondecreasing_count(pair) == 44);
  CHECK(nested_nondecreasing_count(zero) == 0);
  CHECK(nested_nondecreasing_count(neg) == 0);
}

namespace {

void for_each_bounds(std::vector<std::int64_t>& b, std::size_t depth, std::int64_t lo, std::int64_t hi,
                     const std::function<void(const std::vector<std::int64_t>&)>& f) {
  if (b.size() == depth) {
    f(b);
    return;
  }
  for (std::int64_t v = lo; v <= hi; ++v) {
    b.push_back(v);
    for_each_bounds(b, depth, lo, hi, f);
    b.pop_back();
  }
}

}  // namespace

TEST_CASE("nested_nondecreasing_count matches recursive enumeration") {
  std::uint64_t checked = 0;
  for (std::size_t e = 0; e <= 3; ++e) {
    std::vector<std::int64_t> b;
    for_each_bounds(b, e, -1, 12, [&](const std::vector<std::int64_t>& v) {
      REQUIRE(nested_nondecreasing_count(v) == oracle::nested_count(v));
      ++checked;
    });
  }
  // depth 4 and 5 on a coarser grid of entries up to 12
  for (std::size_t e = 4; e <= 5; ++e) {
    std::vector<std::int64_t> b;
    std::function<void(const std::vector<std::int64_t>&)> f = [&](const std::vector<std::int64_t>& v) {
      REQUIRE(nested_nondecreasing_count(v) == oracle::nested_count(v));
      ++checked;
    };
    std::function<void()> rec = [&] {
      if (b.size() == e) return f(b);
      for (std::int64_t v : {0, 1, 3, 6, 9, 12}) {
        b.push_back(v);
        rec();
        b.pop_back();
      }
    };
    rec();
  }
  CHECK(checked > 10000);
}

TEST_CASE("nested_nondecreasing_count is monotone in each bound") {
  std::vector<std::int64_t> b;
  for_each_bounds(b, 3, 0, 6, [](const std::vector<std::int64_t>& v) {
    const Count base = nested_nondecreasing_count(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto up = v;
      ++up[i];
      REQUIRE(nested_nondecreasing_count(up) >= base);
    }
  });
}
