#pragma once

#include <string_view>

namespace cchain {

inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace cchain
