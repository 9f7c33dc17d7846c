#include "cchain/error.hpp"

namespace cchain {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonPositiveDenominator: return "NonPositiveDenominator";
    case Errc::QuotientOutOfRange: return "QuotientOutOfRange";
    case Errc::NotOdd: return "NotOdd";
    case Errc::NotEven: return "NotEven";
    case Errc::Overflow: return "Overflow";
    case Errc::ShapeUnrealizable: return "ShapeUnrealizable";
    case Errc::InvalidU: return "InvalidU";
    case Errc::RangeError: return "RangeError";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::TooSmallN: return "TooSmallN";
    case Errc::GuardExceeded: return "GuardExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace cchain
