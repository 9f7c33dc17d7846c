#include "doctest.h"

#include "cchain/chains.hpp"
#include "cchain/classify.hpp"
#include "cchain/error.hpp"
#include "oracles.hpp"

using namespace cchain;

namespace {

constexpr Cell B = Cell::B;
constexpr Cell BA = Cell::BA;

ChainShape cells(std::initializer_list<Cell> c) { return ChainShape(std::vector<Cell>(c)); }

IncidencePredicate pred(IncidenceKind k, Strictness s, Window w = Window::FullChain) { return {k, s, w}; }

// Shape class from the per-prefix inequality, evaluated with GMP.
ShapeClass oracle_class(const ChainShape& s) {
  int alpha = 0;
  bool prefix = false;
  const auto c = s.cells();
  for (int m = 1; m <= s.beta(); ++m) {
    if (c[static_cast<std::size_t>(m - 1)] == BA) ++alpha;
    const bool holds = oracle::cmp_pow23(m - 1, alpha) == std::strong_ordering::greater;
    if (m == s.beta()) return holds ? ShapeClass::Official : prefix ? ShapeClass::NonOfficial : ShapeClass::Unsatisfying;
    prefix = prefix || holds;
  }
  return ShapeClass::Unsatisfying;
}

// Predicate evaluated on every post-halving value of a plain trajectory.
bool oracle_descends(Value L, int n, const IncidencePredicate& p) {
  const Value limit = Value{1} << n;
  auto below = [&](Value v) { return p.strictness == Strictness::Strict ? v < limit : v <= limit; };
  const int cells_in_window = p.window == Window::FullChain ? n : n - 1;
  Value v = L;
  bool any = false;
  Value last = L;
  for (int i = 0; i < cells_in_window; ++i) {
    if (v % 2 == 1) v = 3 * v + 1;
    v /= 2;
    any = any || below(v);
    last = v;
  }
  if (p.kind == IncidenceKind::FinalBelow) return cells_in_window > 0 && below(last);
  return any;
}

}  // namespace

TEST_CASE("eq_holds") {
  CHECK(eq_holds(1, 3));
  CHECK_FALSE(eq_holds(5, 5));
  CHECK_FALSE(eq_holds(0, 1));
  const SatisfactionTable table(60);
  for (int beta = 1; beta <= 60; ++beta) {
    for (int alpha = 0; alpha <= beta; ++alpha) {
      const bool want = oracle::cmp_pow23(beta - 1, alpha) == std::strong_ordering::greater;
      REQUIRE(eq_holds(alpha, beta) == want);
      REQUIRE(table.holds(alpha, beta) == want);
    }
  }
}

TEST_CASE("classify_shape examples") {
  CHECK(classify_shape(cells({BA, B, B})) == ShapeClass::Official);
  CHECK(classify_shape(cells({BA, B, B, BA, BA})) == ShapeClass::NonOfficial);
  CHECK(classify_shape(cells({BA, BA, BA})) == ShapeClass::Unsatisfying);
}

TEST_CASE("classify_shape agrees with the per-prefix oracle") {
  for (int n = 1; n <= 14; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
      const auto s = ChainShape::from_bits(n, bits);
      const auto c = classify_shape(s);
      REQUIRE(c == oracle_class(s));
      if (c == ShapeClass::Official) REQUIRE(eq_holds(s.alpha(), s.beta()));
    }
  }
}

TEST_CASE("ucc_params") {
  CHECK(ucc_params(3).beta == 6);
  CHECK(ucc_params(3).alpha == 3);
  CHECK(ucc_params(2).beta == 3);
  CHECK(ucc_params(2).alpha == 1);
  CHECK(ucc_params(4).beta - ucc_params(4).alpha == 4);
  CHECK_THROWS_AS(ucc_params(1), Error);
  for (std::int64_t u = 2; u <= 50; ++u) {
    const auto p = ucc_params(u);
    REQUIRE(p.beta - p.alpha == u);
    // 1 < 2^(beta-1) / 3^alpha < 3/2
    const mpz_class num = oracle::pow_ui(2, static_cast<unsigned long>(p.beta - 1));
    const mpz_class den = oracle::pow_ui(3, static_cast<unsigned long>(p.alpha));
    REQUIRE(num > den);
    REQUIRE(2 * num < 3 * den);
  }
}

TEST_CASE("predicate tokens") {
  const auto all = all_predicates();
  CHECK(all.size() == 12);
  for (const auto& p : all) CHECK(parse_predicate(to_token(p)) == p);
  CHECK(to_token(calibrated_predicate()) == "boundary-below-nonstrict-drop-last");
  CHECK(IncidencePredicate{} == calibrated_predicate());
  CHECK(parse_predicate("final-below-strict") == pred(IncidenceKind::FinalBelow, Strictness::Strict));
  CHECK_THROWS_AS(parse_predicate("below"), Error);
}

TEST_CASE("classify_integer examples") {
  const auto final_strict = pred(IncidenceKind::FinalBelow, Strictness::Strict);
  CHECK(classify_integer(13, 3, final_strict).outcome == IntegerOutcome::OfficialShape);
  CHECK(classify_integer(9, 3, final_strict).outcome == IntegerOutcome::Unresolved);
  CHECK(classify_integer(9, 3, pred(IncidenceKind::PostBBelow, Strictness::Strict)).outcome ==
        IntegerOutcome::Incidental);
  for (const auto& p : all_predicates()) {
    if (p.strictness == Strictness::Strict) CHECK(classify_integer(11, 3, p).outcome == IntegerOutcome::Unresolved);
  }
  CHECK_THROWS_AS(classify_integer(7, 3, final_strict), Error);
  CHECK_THROWS_AS(classify_integer(10, 3, final_strict), Error);
}

TEST_CASE("classify_integer matches trace oracle and predicate nesting") {
  const auto all = all_predicates();
  for (int n = 1; n <= 14; ++n) {
    const SatisfactionTable table(n);
    const Value lo = pow2(static_cast<unsigned>(n));
    for (Value L = lo + 1; L <= 2 * lo; L += 2) {
      const auto trace = extract_chain(L, n);
      const auto cls = oracle_class(trace.shape);
      for (const auto& p : all) {
        const auto r = classify_integer(L, n, p, table);
        REQUIRE(r.descends == oracle_descends(L, n, p));
        switch (cls) {
          case ShapeClass::Official: REQUIRE(r.outcome == IntegerOutcome::OfficialShape); break;
          case ShapeClass::NonOfficial: REQUIRE(r.outcome == IntegerOutcome::NonOfficialShape); break;
          case ShapeClass::Unsatisfying:
            REQUIRE(r.outcome == (r.descends ? IntegerOutcome::Incidental : IntegerOutcome::Unresolved));
            break;
        }
      }
      for (auto w : {Window::FullChain, Window::DropLast}) {
        for (auto s : {Strictness::Strict, Strictness::NonStrict}) {
          const bool fin = classify_integer(L, n, pred(IncidenceKind::FinalBelow, s, w), table).descends;
          const bool bnd = classify_integer(L, n, pred(IncidenceKind::CellBoundaryBelow, s, w), table).descends;
          const bool pb = classify_integer(L, n, pred(IncidenceKind::PostBBelow, s, w), table).descends;
          REQUIRE((!fin || bnd));
          REQUIRE((!bnd || pb));
        }
      }
    }
  }
}

TEST_CASE("generative seeds") {
  CHECK(is_generative(31, 5));
  CHECK_FALSE(is_generative(13, 5));
  CHECK_FALSE(is_generative(21, 5));
  CHECK(derive_proper(31, 5) == 47);
  CHECK_THROWS_AS(derive_proper(13, 5), Error);
  CHECK(generative_lower_bound(5) == 22);
  for (int n = 2; n <= 14; ++n) {
    const Value lo = pow2(static_cast<unsigned>(n));
    for (Value L = 1; L <= lo; L += 2) {
      if (!is_generative(L, n)) continue;
      REQUIRE(3 * L >= 2 * lo);
      const Value p = derive_proper(L, n);
      REQUIRE(p % 2 == 1);
      REQUIRE(p > lo);
      REQUIRE(p < 2 * lo);
    }
  }
}

TEST_CASE("concerned intervals") {
  CHECK(interval_k(1).lo == Rational(3, 4));
  CHECK(interval_k(1).hi == Rational(1));
  CHECK(interval_k(2).lo == Rational(11, 16));
  CHECK(interval_k(2).hi == Rational(3, 4));
  Rational prev = interval_k(1).lo;
  for (int K = 2; K <= 40; ++K) {
    const auto I = interval_k(K);
    REQUIRE(I.lo < prev);
    REQUIRE(I.lo > Rational(2, 3));
    REQUIRE(I.hi == prev);
    prev = I.lo;
  }
  // ]3*2^(n-2), 2^n] at n = 6 is ]48, 64]
  CHECK_FALSE(interval_k(1).contains(48, 6));
  CHECK(interval_k(1).contains(49, 6));
  CHECK(interval_k(1).contains(64, 6));
  for (int n = 3; n <= 14; ++n) {
    const Value lo = pow2(static_cast<unsigned>(n));
    for (Value L = generative_lower_bound(n); L <= lo; ++L) {
      const auto k = interval_index(L, n);
      REQUIRE(k.has_value());
      REQUIRE(interval_k(*k).contains(L, n));
    }
  }
  CHECK_FALSE(interval_index(1, 6).has_value());
}
