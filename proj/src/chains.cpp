#include "cchain/chains.hpp"

#include <algorithm>

#include "cchain/error.hpp"

namespace cchain {

ChainShape::ChainShape(std::vector<Cell> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw Error(Errc::InvalidArgument, "empty chain shape");
  if (cells_.front() != Cell::BA) throw Error(Errc::InvalidArgument, "chain shape must start with BA");
}

ChainShape ChainShape::from_bits(int n, std::uint64_t tail_bits) {
  if (n < 1 || n > 64) throw Error(Errc::InvalidArgument, "from_bits needs 1 <= n <= 64");
  std::vector<Cell> cells(static_cast<std::size_t>(n), Cell::B);
  cells[0] = Cell::BA;
  for (int i = 1; i < n; ++i) {
    if ((tail_bits >> (i - 1)) & 1) cells[static_cast<std::size_t>(i)] = Cell::BA;
  }
  return ChainShape(std::move(cells));
}

ChainShape ChainShape::parse(std::string_view text) {
  std::vector<Cell> reversed;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'B') throw Error(Errc::InvalidArgument, "bad shape string: " + std::string(text));
    if (i + 1 < text.size() && text[i + 1] == 'A') {
      reversed.push_back(Cell::BA);
      ++i;
    } else {
      reversed.push_back(Cell::B);
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  return ChainShape(std::move(reversed));
}

int ChainShape::alpha() const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), Cell::BA));
}

std::uint64_t ChainShape::tail_bits() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 1; i < cells_.size() && i <= 64; ++i) {
    if (cells_[i] == Cell::BA) bits |= std::uint64_t{1} << (i - 1);
  }
  return bits;
}

ChainShape ChainShape::prefix(int m) const {
  if (m < 1 || m > beta()) throw Error(Errc::InvalidArgument, "prefix length out of range");
  return ChainShape(std::vector<Cell>(cells_.begin(), cells_.begin() + m));
}

std::string shape_string(const ChainShape& shape) {
  std::string out;
  const auto cells = shape.cells();
  for (auto it = cells.rbegin(); it != cells.rend(); ++it) out += (*it == Cell::BA) ? "BA" : "B";
  return out;
}

ChainTrace extract_chain(Value L, int n) {
  if (!is_odd(L)) throw Error(Errc::NotOdd, "chain seed must be odd, got " + to_string(L));
  if (n < 1) throw Error(Errc::InvalidArgument, "chain length must be positive");
  std::vector<Cell> cells;
  std::vector<Value> values;
  cells.reserve(static_cast<std::size_t>(n));
  values.reserve(static_cast<std::size_t>(n));
  Value v = L;
  for (int m = 0; m < n; ++m) {
    if (is_odd(v)) {
      v = ba_step(v);
      cells.push_back(Cell::BA);
    } else {
      v = b_step(v);
      cells.push_back(Cell::B);
    }
    values.push_back(v);
  }
  return ChainTrace{L, ChainShape(std::move(cells)), std::move(values)};
}

Theorem1Result theorem1_check(Value L, int z) {
  if (z < 1 || z > 100) throw Error(Errc::InvalidArgument, "theorem1_check needs 1 <= z <= 100");
  if (L >= pow2(static_cast<unsigned>(z))) throw Error(Errc::PreconditionViolated, "L must be below 2^z");

  Theorem1Result r;
  r.base = extract_chain(L, z);
  r.shifted = extract_chain(pow2(static_cast<unsigned>(z)) + L, z);

  Value three_alpha = 1;
  for (int i = 0; i < r.base.shape.alpha(); ++i) three_alpha *= 3;

  if (!(r.base.shape == r.shifted.shape)) {
    r.failure = "shapes differ: " + shape_string(r.base.shape) + " vs " + shape_string(r.shifted.shape);
  } else if (r.shifted.final_value() - r.base.final_value() != three_alpha) {
    r.failure = "final difference " + to_string(r.shifted.final_value() - r.base.final_value()) +
                " != 3^" + std::to_string(r.base.shape.alpha());
  } else if (is_odd(r.shifted.final_value()) == is_odd(r.base.final_value())) {
    r.failure = "final values share parity";
  }
  r.passed = r.failure.empty();
  return r;
}

Value invert_shape(const ChainShape& shape, int n) {
  if (shape.beta() != n) throw Error(Errc::PreconditionViolated, "shape length must equal n");
  if (n > 100) throw Error(Errc::InvalidArgument, "invert_shape supports n <= 100");
  const auto cells = shape.cells();

  // residue matches cells[0..j) modulo 2^j; value is the residue's image after j cells.
  Value residue = 1;
  Value value = ba_step(1);
  for (int j = 1; j < n; ++j) {
    const bool want_odd = cells[static_cast<std::size_t>(j)] == Cell::BA;
    if (is_odd(value) != want_odd) {
      // Adding 2^j shifts the value after j cells by 3^alpha_j, flipping its parity.
      residue += pow2(static_cast<unsigned>(j));
      Value v = residue;
      for (int m = 0; m < j; ++m) v = is_odd(v) ? ba_step(v) : b_step(v);
      value = v;
      if (is_odd(value) != want_odd) {
        throw Error(Errc::ShapeUnrealizable, "no residue realizes " + shape_string(shape));
      }
    }
    value = want_odd ? ba_step(value) : b_step(value);
  }
  return pow2(static_cast<unsigned>(n)) + residue;
}

}  // namespace cchain
