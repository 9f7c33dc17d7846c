#include "doctest.h"

#include "cchain/census.hpp"
#include "cchain/counting.hpp"
#include "cchain/error.hpp"
#include "cchain/reference.hpp"

using namespace cchain;

TEST_CASE("official_count") {
  CHECK(official_count(3) == 1);
  CHECK(official_count(4) == 1);
  CHECK(official_count(2) == 0);  // neither [BA,B] nor [BA,BA] satisfies 2 > 3^alpha
  CHECK_THROWS_AS(official_count(1), Error);
}

TEST_CASE("official_count equals enumerated official shapes") {
  for (int n = 2; n <= 25; ++n) {
    std::uint64_t official = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
      // alpha = 1 + popcount(bits); full-chain inequality only
      const int alpha = 1 + std::popcount(bits);
      if (eq_holds(alpha, n)) ++official;
    }
    REQUIRE(official_count(n) == official);
  }
}

TEST_CASE("w_gamma") {
  // 11-cell chain with 7 BA cells built on a 3-comprehensive core (6 cells, 3 BA)
  CHECK(w_gamma(11, 8, 7, 1) == 2);
  CHECK(w_gamma(11, 8, 7, 40) <= 0);
}

TEST_CASE("gamma reproduces the reference column") {
  CHECK(cchain::gamma(3).total == 1);
  CHECK(cchain::gamma(10).total == 354);
  CHECK(cchain::gamma(25).total == 15415312);
  for (const auto& row : reference::kRows) {
    const auto g = cchain::gamma(row.n);
    REQUIRE(g.total == row.gamma);
    REQUIRE(g.total == g.term_official + g.term_nonofficial_nofree + g.term_nonofficial_free);
  }
  CHECK_THROWS_AS(cchain::gamma(2), Error);
}

TEST_CASE("g, h and z caps") {
  CHECK(g_cap(14) == 2);
  CHECK(g_cap(7) == 1);
  CHECK_THROWS_AS(g_cap(6), Error);
  CHECK(h_cap(14, 1) == 2);
  CHECK(h_cap(14, 2) == 1);
  CHECK(h_cap(7, 1) == 0);
  CHECK(z_moves(14, 1, 1, 1) == 10);
  CHECK(z_moves(14, 1, 2, 1) == 9);
  CHECK(z_moves(14, 1, 2, 2) == 8);
  CHECK(z_moves(14, 2, 1, 1) == 8);
}

TEST_CASE("delta reproduces the reference column") {
  const auto d14 = delta(14);
  CHECK(d14.total == 64);
  CHECK(d14.g == 2);
  REQUIRE(d14.terms.size() == 3);
  CHECK(d14.terms[0].count == 10);
  CHECK(d14.terms[1].count == 44);
  CHECK(d14.terms[1].bounds == std::vector<std::int64_t>{8, 9});
  CHECK(d14.terms[2].count == 8);
  CHECK(d14.terms[2].K == 2);
  CHECK(delta(6).total == 0);
  CHECK(delta(6).terms.empty());
  CHECK(delta(25).total == 83390);
  for (const auto& row : reference::kRows) {
    const auto d = delta(row.n);
    REQUIRE(d.total == row.delta);
    Count sum = d.g;
    for (const auto& t : d.terms) sum += t.count;
    REQUIRE(sum == d.total);
  }
}

TEST_CASE("counts are nondecreasing over the table range") {
  for (int n = 3; n < 25; ++n) {
    CHECK(cchain::gamma(n + 1).total >= cchain::gamma(n).total);
    CHECK(delta(n + 1).total >= delta(n).total);
  }
}

TEST_CASE("ratio lemma") {
  const auto small = ratio_check({{3, 1}, {4, 2}});
  REQUIRE(small.pairs.size() == 1);
  CHECK(small.pairs[0].equal);
  CHECK(small.pairs[0].lhs == Rational(5, 8));
  CHECK(ratio_check({{9, 177}, {10, 354}}).pairs[0].equal);
  CHECK_FALSE(ratio_check({{9, 177}, {10, 300}}).all_hold);

  std::vector<std::pair<std::int64_t, Count>> seq;
  for (int n = 3; n <= 25; ++n) seq.emplace_back(n, cchain::gamma(n).total);
  const auto report = ratio_check(seq);
  CHECK(report.all_hold);
  CHECK(report.pairs.size() == 22);
  for (const auto& p : report.pairs) {
    // 2 gamma(n) <= gamma(n+1) is exactly the holds condition
    const Count gn = cchain::gamma(p.n).total;
    const Count gn1 = cchain::gamma(p.n + 1).total;
    CHECK(p.holds == (2 * gn <= gn1));
  }
  CHECK_THROWS_AS(ratio_check({{3, 1}, {5, 6}}), Error);
}
