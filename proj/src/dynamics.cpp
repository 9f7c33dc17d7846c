#include "cchain/dynamics.hpp"

#include <algorithm>
#include <limits>

#include "cchain/error.hpp"

namespace cchain {
namespace {

constexpr Value kMax = ~Value{0};
constexpr Value kMaxTripleable = (kMax - 1) / 3;

}  // namespace

std::string to_string(Value v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Value parse_value(const std::string& text) {
  if (text.empty()) throw Error(Errc::InvalidArgument, "empty integer");
  Value v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(Errc::InvalidArgument, "not a decimal integer: " + text);
    const auto digit = static_cast<unsigned>(c - '0');
    if (v > (kMax - digit) / 10) throw Error(Errc::Overflow, "integer too large: " + text);
    v = v * 10 + digit;
  }
  return v;
}

Count to_count(Value v) {
  Count out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

Value a_step(Value v) {
  if (!is_odd(v)) throw Error(Errc::NotOdd, "A applied to even value " + to_string(v));
  if (v > kMaxTripleable) throw Error(Errc::Overflow, "3v+1 overflows at v=" + to_string(v));
  return 3 * v + 1;
}

Value b_step(Value v) {
  if (is_odd(v)) throw Error(Errc::NotEven, "B applied to odd value " + to_string(v));
  return v / 2;
}

Value ba_step(Value v) { return b_step(a_step(v)); }

TrajectoryOutcome run_until_below(Value v, Value threshold, std::uint64_t max_b_steps) {
  if (v < 1 || threshold < 1) throw Error(Errc::InvalidArgument, "run_until_below needs v, threshold >= 1");
  TrajectoryOutcome out;
  out.minimum = v;
  while (true) {
    if (v < threshold) {
      out.reached = true;
      break;
    }
    if (out.b_steps == max_b_steps) break;
    if (is_odd(v)) {
      v = a_step(v);
    } else {
      v = b_step(v);
      ++out.b_steps;
    }
    ++out.steps;
    out.minimum = std::min(out.minimum, v);
  }
  out.value = v;
  return out;
}

}  // namespace cchain
