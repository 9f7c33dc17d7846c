#pragma once

// Chains C_n(L): the cell decomposition of an odd integer's first n halvings.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cchain/dynamics.hpp"

namespace cchain {

/// B halves an even value; BA maps an odd value v to (3v+1)/2.
enum class Cell : std::uint8_t { B, BA };

class ChainShape {
 public:
  /// Throws InvalidArgument unless cells is nonempty and starts with BA.
  explicit ChainShape(std::vector<Cell> cells);

  /// Shape of length n whose cells 2..n are BA exactly where bit (i-2) of
  /// tail_bits is set. Cell 1 is always BA.
  static ChainShape from_bits(int n, std::uint64_t tail_bits);

  /// Parses the composition string produced by shape_string.
  static ChainShape parse(std::string_view text);

  std::span<const Cell> cells() const { return cells_; }
  int beta() const { return static_cast<int>(cells_.size()); }
  int alpha() const;
  std::uint64_t tail_bits() const;

  /// The first m cells, itself a chain C_m.
  ChainShape prefix(int m) const;

  friend bool operator==(const ChainShape&, const ChainShape&) = default;

 private:
  std::vector<Cell> cells_;
};

/// Composition notation, last operation leftmost: [BA,B,B,BA,BA] -> "BABABBBA".
std::string shape_string(const ChainShape& shape);

struct ChainTrace {
  Value start = 0;
  ChainShape shape{{Cell::BA}};
  std::vector<Value> boundary_values;  // value after each cell

  Value final_value() const { return boundary_values.back(); }
};

/// Applies cells to odd L until n halvings are consumed.
ChainTrace extract_chain(Value L, int n);

struct Theorem1Result {
  bool passed = false;
  std::string failure;  // empty on success
  ChainTrace base;      // C_z(L)
  ChainTrace shifted;   // C_z(2^z + L)
};

/// Periodicity check for M = 2^z + L: equal shapes, final values differing
/// by exactly 3^alpha, and final values of opposite parity.
Theorem1Result theorem1_check(Value L, int z);

/// The unique odd L in [2^n + 1, 2^(n+1)] whose chain C_n has this shape.
/// Built by lifting the residue class of L one bit per cell.
Value invert_shape(const ChainShape& shape, int n);

}  // namespace cchain
