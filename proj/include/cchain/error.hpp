#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cchain {

enum class Errc {
  NonPositiveDenominator,
  QuotientOutOfRange,
  NotOdd,
  NotEven,
  Overflow,
  ShapeUnrealizable,
  InvalidU,
  RangeError,
  PreconditionViolated,
  TooSmallN,
  GuardExceeded,
  InvalidArgument,
  Io,
};

std::string_view to_string(Errc code) noexcept;

// All library failures surface as this exception; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cchain
