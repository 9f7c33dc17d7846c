#pragma once

// The elementary Collatz maps and raw trajectory iteration.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cchain/exactmath.hpp"

namespace cchain {

// Orbit values: 128-bit unsigned with checked arithmetic (overflow throws).
using Value = unsigned __int128;

std::string to_string(Value v);
Value parse_value(const std::string& text);
Count to_count(Value v);

constexpr bool is_odd(Value v) { return (v & 1) != 0; }

constexpr Value pow2(unsigned k) { return Value{1} << k; }

/// A(v) = 3v + 1 for odd v.
Value a_step(Value v);

/// B(v) = v / 2 for even v.
Value b_step(Value v);

/// (3v + 1) / 2 for odd v: one BA cell.
Value ba_step(Value v);

struct TrajectoryOutcome {
  bool reached = false;      // a value below the threshold was seen
  Value value = 0;           // first value below threshold, or last value when unresolved
  std::uint64_t steps = 0;   // total A and B operations performed
  std::uint64_t b_steps = 0; // halvings performed
  Value minimum = 0;         // running minimum, start value included
};

/// Iterates the Collatz map from v until a value < threshold appears or
/// max_b_steps halvings have elapsed.
TrajectoryOutcome run_until_below(Value v, Value threshold, std::uint64_t max_b_steps);

}  // namespace cchain
