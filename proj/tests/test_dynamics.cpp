#include "doctest.h"

#include "cchain/dynamics.hpp"
#include "cchain/error.hpp"

using namespace cchain;

TEST_CASE("single steps") {
  CHECK(a_step(3) == 10);
  CHECK(a_step(1) == 4);
  CHECK(a_step(61) == 184);
  CHECK(b_step(10) == 5);
  CHECK(b_step(2) == 1);
  CHECK(b_step(184) == 92);
  CHECK_THROWS_AS(a_step(4), Error);
  CHECK_THROWS_AS(b_step(5), Error);
  for (Value v = 1; v < 2001; v += 2) {
    REQUIRE(!is_odd(a_step(v)));
    REQUIRE(b_step(a_step(v)) == (3 * v + 1) / 2);
    REQUIRE(ba_step(v) == (3 * v + 1) / 2);
  }
}

TEST_CASE("a_step detects overflow") {
  const Value big = ~Value{0};
  try {
    a_step(big);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Overflow);
  }
}

TEST_CASE("value text round-trip") {
  CHECK(to_string(Value{0}) == "0");
  CHECK(to_string(pow2(100)) == "1267650600228229401496703205376");
  CHECK(parse_value("1267650600228229401496703205376") == pow2(100));
  CHECK_THROWS_AS(parse_value("12x"), Error);
  CHECK_THROWS_AS(parse_value(""), Error);
  CHECK_THROWS_AS(parse_value("999999999999999999999999999999999999999999"), Error);
  CHECK(to_count(pow2(90)) == (Count{1} << 90));
}

TEST_CASE("run_until_below") {
  const auto three = run_until_below(3, 2, 100);
  CHECK(three.reached);
  CHECK(three.value == 1);
  CHECK(three.steps == 7);  // 3,10,5,16,8,4,2,1
  CHECK(three.b_steps == 5);
  CHECK(three.minimum == 1);

  const auto one = run_until_below(1, 2, 0);
  CHECK(one.reached);
  CHECK(one.steps == 0);

  const auto thirteen = run_until_below(13, 8, 3);
  CHECK(thirteen.reached);
  CHECK(thirteen.value == 5);
  CHECK(thirteen.b_steps == 3);

  const auto capped = run_until_below(27, 2, 5);
  CHECK_FALSE(capped.reached);
  CHECK(capped.b_steps == 5);
  CHECK(capped.minimum <= capped.value);
}

TEST_CASE("run_until_below is deterministic with a true minimum") {
  for (Value v = 1; v < 500; ++v) {
    const auto a = run_until_below(v, v, 60);
    const auto b = run_until_below(v, v, 60);
    REQUIRE(a.value == b.value);
    REQUIRE(a.steps == b.steps);
    REQUIRE(a.minimum <= a.value);
    REQUIRE(a.minimum <= v);
  }
}
