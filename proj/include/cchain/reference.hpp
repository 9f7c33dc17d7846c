#pragma once

// Published reference values for n = 3..25, used for calibration and the
// acceptance suite. gamma_plus_t - gamma and t are two independent listings
// of the same series.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace cchain::reference {

struct Row {
  int n;
  std::uint64_t gamma;
  std::uint64_t gamma_plus_t;
  std::string_view ratio_gamma;    // (gamma + 2^(n-1)) / 2^n, 12 digits
  std::string_view ratio_gamma_t;  // (gamma + T + 2^(n-1)) / 2^n, 12 digits
  std::uint64_t delta;
  std::uint64_t t;
};

inline constexpr int kMinN = 3;
inline constexpr int kMaxN = 25;

inline constexpr std::array<Row, 23> kRows{{
    {3, 1, 1, "0.625000000000", "0.625000000000", 0, 0},
    {4, 2, 3, "0.625000000000", "0.687500000000", 0, 1},
    {5, 6, 9, "0.687500000000", "0.781250000000", 0, 3},
    {6, 17, 17, "0.765625000000", "0.765625000000", 0, 0},
    {7, 34, 40, "0.765625000000", "0.812500000000", 1, 6},
    {8, 77, 85, "0.800781250000", "0.832031250000", 1, 8},
    {9, 177, 178, "0.845703125000", "0.847656250000", 1, 1},
    {10, 354, 385, "0.845703125000", "0.875976562500", 8, 31},
    {11, 751, 792, "0.866699218750", "0.886718750000", 9, 41},
    {12, 1502, 1624, "0.866699218750", "0.896484375000", 43, 122},
    {13, 3117, 3372, "0.880493164062", "0.911621093750", 53, 255},
    {14, 6565, 6822, "0.900695800781", "0.916381835937", 64, 257},
    {15, 13130, 13946, "0.900695800781", "0.925598144531", 261, 816},
    {16, 26958, 28370, "0.911346435546", "0.932891845703", 337, 1412},
    {17, 55882, 57256, "0.926345825195", "0.936828613281", 426, 1374},
    {18, 111764, 116579, "0.926345825195", "0.944713592529", 1580, 4815},
    {19, 227600, 234910, "0.934112548828", "0.948055267333", 2109, 7310},
    {20, 455200, 473325, "0.934112548828", "0.951397895812", 6949, 18125},
    {21, 921833, 959987, "0.939564228057", "0.957757472991", 9705, 38154},
    {22, 1878800, 1926862, "0.947940826416", "0.959399700164", 13242, 48062},
    {23, 3757600, 3880688, "0.947940826416", "0.962614059448", 42398, 123088},
    {24, 7593367, 7818474, "0.952599942684", "0.966017365455", 60109, 225107},
    {25, 15415312, 15687824, "0.959412097930", "0.967533588409", 83390, 272512},
}};

inline std::optional<Row> row(int n) {
  if (n < kMinN || n > kMaxN) return std::nullopt;
  return kRows[static_cast<std::size_t>(n - kMinN)];
}

}  // namespace cchain::reference
