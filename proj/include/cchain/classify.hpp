#pragma once

// Classification of chain shapes and integers around the descent inequality
// 2^(beta-1) > 3^alpha.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cchain/chains.hpp"
#include "cchain/exactmath.hpp"

namespace cchain {

enum class ShapeClass { Official, NonOfficial, Unsatisfying };

std::string_view to_string(ShapeClass c);

/// 2^(beta-1) > 3^alpha, decided exactly.
bool eq_holds(std::int64_t alpha, std::int64_t beta);

/// Precomputed eq_holds thresholds for chain lengths 1..max_beta:
/// eq_holds(alpha, m) iff alpha <= max_alpha(m).
class SatisfactionTable {
 public:
  explicit SatisfactionTable(int max_beta);

  int max_beta() const { return static_cast<int>(max_alpha_.size()) - 1; }
  std::int64_t max_alpha(int beta) const { return max_alpha_[static_cast<std::size_t>(beta)]; }
  bool holds(std::int64_t alpha, int beta) const { return alpha <= max_alpha(beta); }

 private:
  std::vector<std::int64_t> max_alpha_;
};

/// Official if the whole shape satisfies the inequality; NonOfficial if only
/// some proper whole-cell prefix does; Unsatisfying otherwise.
ShapeClass classify_shape(const ChainShape& shape);

struct UccParams {
  std::int64_t beta = 0;
  std::int64_t alpha = 0;
};

/// (beta, alpha) of a u-comprehensive chain, u >= 2. Verifies beta - alpha = u
/// and 1 < 2^(beta-1) / 3^alpha < 3/2.
UccParams ucc_params(std::int64_t u);

// ---------------------------------------------------------------------------
// Incidence predicates
//
// An integer L in (2^n, 2^(n+1)] "descends" when the predicate sees a value
// below 2^n along C_n(L):
//   FinalBelow         the value after the last cell of the window
//   CellBoundaryBelow  any cell-boundary value in the window
//   PostBBelow         any value produced by a halving in the window
// Every halving closes a cell, so the last two accept the same integers.
// The window is either the whole chain (n cells) or its first n-1 cells.

enum class IncidenceKind { FinalBelow, CellBoundaryBelow, PostBBelow };
enum class Strictness { Strict, NonStrict };
enum class Window { FullChain, DropLast };

struct IncidencePredicate {
  IncidenceKind kind = IncidenceKind::CellBoundaryBelow;
  Strictness strictness = Strictness::NonStrict;
  Window window = Window::DropLast;

  friend bool operator==(const IncidencePredicate&, const IncidencePredicate&) = default;
};

/// Tokens: "<final|boundary|postb>-below-<strict|nonstrict>[-drop-last]".
std::string to_token(const IncidencePredicate& p);
IncidencePredicate parse_predicate(std::string_view token);

/// All twelve predicate variants in a fixed order.
std::vector<IncidencePredicate> all_predicates();

/// The variant that reproduces the reference T(n) series (see census calibration).
IncidencePredicate calibrated_predicate();

enum class IntegerOutcome { OfficialShape, NonOfficialShape, Incidental, Unresolved };

std::string_view to_string(IntegerOutcome o);

/// Everything the classifiers need from one pass over C_n(L).
struct ChainFacts {
  ShapeClass shape_class = ShapeClass::Unsatisfying;
  Value final_value = 0;            // after cell n
  Value value_before_last = 0;      // after cell n-1 (L itself when n = 1)
  Value min_before_last = 0;        // min over cells 1..n-1 (max Value when n = 1)
};

/// Streams C_n(L) without materializing the trace. table must cover n.
ChainFacts chain_facts(Value L, int n, const SatisfactionTable& table);

/// Whether pred sees a descent below 2^n.
bool descends(const IncidencePredicate& pred, const ChainFacts& facts, int n);

struct IntegerClassification {
  IntegerOutcome outcome = IntegerOutcome::Unresolved;
  bool descends = false;  // predicate verdict irrespective of shape class
};

/// Shape class first; unsatisfying shapes are Incidental iff pred accepts.
IntegerClassification classify_integer(Value L, int n, const IncidencePredicate& pred);
IntegerClassification classify_integer(Value L, int n, const IncidencePredicate& pred,
                                       const SatisfactionTable& table);

// ---------------------------------------------------------------------------
// Generative seeds

/// ceil((2/3) * 2^n), the smallest integer of the generative window.
Value generative_lower_bound(int n);

/// L odd in [ceil(2^(n+1)/3), 2^n], C_n(L) unsatisfying and its second cell BA.
bool is_generative(Value L, int n);

/// (3L+1)/2 for a generative L; lies strictly inside (2^n, 2^(n+1)) and is odd.
Value derive_proper(Value L, int n);

/// I_K = ] lo * 2^n, hi * 2^n ].
struct IntervalK {
  int K = 1;
  Rational lo;
  Rational hi;

  bool contains(Value L, int n) const;
};

IntervalK interval_k(int K);

/// The K with L in I_K, if L lies in (2/3 * 2^n, 2^n].
std::optional<int> interval_index(Value L, int n);

}  // namespace cchain
