#include "cchain/classify.hpp"

#include <limits>

#include "cchain/error.hpp"

namespace cchain {

std::string_view to_string(ShapeClass c) {
  switch (c) {
    case ShapeClass::Official: return "official";
    case ShapeClass::NonOfficial: return "non_official";
    case ShapeClass::Unsatisfying: return "unsatisfying";
  }
  return "?";
}

std::string_view to_string(IntegerOutcome o) {
  switch (o) {
    case IntegerOutcome::OfficialShape: return "official";
    case IntegerOutcome::NonOfficialShape: return "non_official";
    case IntegerOutcome::Incidental: return "incidental";
    case IntegerOutcome::Unresolved: return "unresolved";
  }
  return "?";
}

bool eq_holds(std::int64_t alpha, std::int64_t beta) {
  if (alpha < 0 || beta < 1) throw Error(Errc::InvalidArgument, "eq_holds needs alpha >= 0, beta >= 1");
  return cmp_pow23(beta - 1, alpha) == std::strong_ordering::greater;
}

SatisfactionTable::SatisfactionTable(int max_beta) {
  if (max_beta < 1) throw Error(Errc::InvalidArgument, "SatisfactionTable needs max_beta >= 1");
  max_alpha_.assign(static_cast<std::size_t>(max_beta) + 1, -1);
  // 3^alpha < 2^(m-1) <=> alpha <= floor((m-1) log3 2), except m = 1 where 1 > 1 fails.
  for (int m = 2; m <= max_beta; ++m) max_alpha_[static_cast<std::size_t>(m)] = floor_mul_log32(m - 1);
}

ShapeClass classify_shape(const ChainShape& shape) {
  if (eq_holds(shape.alpha(), shape.beta())) return ShapeClass::Official;
  std::int64_t alpha = 0;
  const auto cells = shape.cells();
  for (int m = 1; m < shape.beta(); ++m) {
    if (cells[static_cast<std::size_t>(m - 1)] == Cell::BA) ++alpha;
    if (eq_holds(alpha, m)) return ShapeClass::NonOfficial;
  }
  return ShapeClass::Unsatisfying;
}

UccParams ucc_params(std::int64_t u) {
  if (u < 2) throw Error(Errc::InvalidU, "u-comprehensive parameters need u >= 2, got " + std::to_string(u));
  const LinForm lambda_minus_one{-1, 1};
  UccParams p;
  p.beta = floor_linfrac({-1, u}, lambda_minus_one);
  p.alpha = floor_linfrac({u - 1, 0}, lambda_minus_one);

  // 1 < 2^(beta-1)/3^alpha < 3/2  <=>  2^(beta-1) > 3^alpha  and  2^beta < 3^(alpha+1)
  const bool sandwich = cmp_pow23(p.beta - 1, p.alpha) == std::strong_ordering::greater &&
                        cmp_pow23(p.beta, p.alpha + 1) == std::strong_ordering::less;
  if (p.beta - p.alpha != u || !sandwich) {
    throw Error(Errc::PreconditionViolated, "u-comprehensive postcondition failed at u=" + std::to_string(u));
  }
  return p;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kDropLastSuffix = "-drop-last";

}  // namespace

std::string to_token(const IncidencePredicate& p) {
  std::string token;
  switch (p.kind) {
    case IncidenceKind::FinalBelow: token = "final-below"; break;
    case IncidenceKind::CellBoundaryBelow: token = "boundary-below"; break;
    case IncidenceKind::PostBBelow: token = "postb-below"; break;
  }
  token += p.strictness == Strictness::Strict ? "-strict" : "-nonstrict";
  if (p.window == Window::DropLast) token += kDropLastSuffix;
  return token;
}

IncidencePredicate parse_predicate(std::string_view token) {
  for (const auto& p : all_predicates()) {
    if (to_token(p) == token) return p;
  }
  throw Error(Errc::InvalidArgument, "unknown predicate token: " + std::string(token));
}

std::vector<IncidencePredicate> all_predicates() {
  std::vector<IncidencePredicate> out;
  for (auto window : {Window::FullChain, Window::DropLast}) {
    for (auto kind : {IncidenceKind::FinalBelow, IncidenceKind::CellBoundaryBelow, IncidenceKind::PostBBelow}) {
      for (auto strictness : {Strictness::Strict, Strictness::NonStrict}) {
        out.push_back({kind, strictness, window});
      }
    }
  }
  return out;
}

IncidencePredicate calibrated_predicate() {
  return {IncidenceKind::CellBoundaryBelow, Strictness::NonStrict, Window::DropLast};
}

ChainFacts chain_facts(Value L, int n, const SatisfactionTable& table) {
  if (n > table.max_beta()) throw Error(Errc::InvalidArgument, "satisfaction table too short");
  ChainFacts f;
  f.value_before_last = L;
  f.min_before_last = ~Value{0};
  std::int64_t alpha = 0;
  bool prefix_holds = false;
  Value v = L;
  for (int m = 1; m <= n; ++m) {
    if (is_odd(v)) {
      v = ba_step(v);
      ++alpha;
    } else {
      v >>= 1;
    }
    if (m < n) {
      prefix_holds = prefix_holds || table.holds(alpha, m);
      if (v < f.min_before_last) f.min_before_last = v;
      if (m == n - 1) f.value_before_last = v;
    }
  }
  f.final_value = v;
  if (table.holds(alpha, n)) {
    f.shape_class = ShapeClass::Official;
  } else if (prefix_holds) {
    f.shape_class = ShapeClass::NonOfficial;
  } else {
    f.shape_class = ShapeClass::Unsatisfying;
  }
  return f;
}

bool descends(const IncidencePredicate& pred, const ChainFacts& facts, int n) {
  const Value limit = pow2(static_cast<unsigned>(n));
  auto below = [&](Value v) { return pred.strictness == Strictness::Strict ? v < limit : v <= limit; };
  const bool full = pred.window == Window::FullChain;
  switch (pred.kind) {
    case IncidenceKind::FinalBelow:
      return below(full ? facts.final_value : facts.value_before_last);
    case IncidenceKind::CellBoundaryBelow:
    case IncidenceKind::PostBBelow: {
      const bool early = n > 1 && below(facts.min_before_last);
      return early || (full && below(facts.final_value));
    }
  }
  return false;
}

IntegerClassification classify_integer(Value L, int n, const IncidencePredicate& pred,
                                       const SatisfactionTable& table) {
  if (n < 1 || n > 120) throw Error(Errc::RangeError, "n out of range");
  if (!is_odd(L)) throw Error(Errc::NotOdd, "classify_integer needs odd L");
  const Value lo = pow2(static_cast<unsigned>(n));
  if (L <= lo || L > 2 * lo) throw Error(Errc::RangeError, "L must lie in (2^n, 2^(n+1)]");

  const ChainFacts facts = chain_facts(L, n, table);
  IntegerClassification out;
  out.descends = descends(pred, facts, n);
  switch (facts.shape_class) {
    case ShapeClass::Official: out.outcome = IntegerOutcome::OfficialShape; break;
    case ShapeClass::NonOfficial: out.outcome = IntegerOutcome::NonOfficialShape; break;
    case ShapeClass::Unsatisfying:
      out.outcome = out.descends ? IntegerOutcome::Incidental : IntegerOutcome::Unresolved;
      break;
  }
  return out;
}

IntegerClassification classify_integer(Value L, int n, const IncidencePredicate& pred) {
  if (n < 1 || n > 120) throw Error(Errc::RangeError, "n out of range");
  return classify_integer(L, n, pred, SatisfactionTable(n));
}

// ---------------------------------------------------------------------------

Value generative_lower_bound(int n) { return (pow2(static_cast<unsigned>(n + 1)) + 2) / 3; }

bool is_generative(Value L, int n) {
  if (n < 2 || n > 120) return false;
  if (!is_odd(L) || L < generative_lower_bound(n) || L > pow2(static_cast<unsigned>(n))) return false;
  const ChainTrace trace = extract_chain(L, n);
  return trace.shape.cells()[1] == Cell::BA && classify_shape(trace.shape) == ShapeClass::Unsatisfying;
}

Value derive_proper(Value L, int n) {
  if (!is_generative(L, n)) {
    throw Error(Errc::PreconditionViolated, to_string(L) + " is not generative at n=" + std::to_string(n));
  }
  const Value proper = ba_step(L);
  const Value lo = pow2(static_cast<unsigned>(n));
  if (!is_odd(proper) || proper <= lo || proper >= 2 * lo) {
    throw Error(Errc::PreconditionViolated, "proper seed escaped (2^n, 2^(n+1))");
  }
  return proper;
}

bool IntervalK::contains(Value L, int n) const {
  const Rational r(to_count(L), Count{1} << n);
  return lo < r && r <= hi;
}

IntervalK interval_k(int K) {
  if (K < 1 || K > 200) throw Error(Errc::InvalidArgument, "interval_k needs 1 <= K <= 200");
  const Count four_k = Count{1} << (2 * K);
  IntervalK out;
  out.K = K;
  out.lo = Rational(2 * four_k + 1, 3 * four_k);   // (2^(2K+1) + 1) / (3 * 2^(2K))
  out.hi = Rational(four_k / 2 + 1, 3 * four_k / 4);  // (2^(2K-1) + 1) / (3 * 2^(2K-2))
  return out;
}

std::optional<int> interval_index(Value L, int n) {
  if (n < 1 || n > 60) throw Error(Errc::InvalidArgument, "interval_index supports 1 <= n <= 60");
  const Value top = pow2(static_cast<unsigned>(n));
  if (3 * L <= 2 * top || L > top) return std::nullopt;
  // L > lo_K * 2^n  <=>  3 * 2^(2K) * L > (2^(2K+1) + 1) * 2^n
  for (int K = 1;; ++K) {
    if (2 * K + n + 3 > 127) throw Error(Errc::Overflow, "interval index search overflowed");
    const Value lhs = (3 * L) << (2 * K);
    const Value rhs = (pow2(static_cast<unsigned>(2 * K + 1)) + 1) << n;
    if (lhs > rhs) return K;
  }
}

}  // namespace cchain
