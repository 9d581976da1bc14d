#include <doctest.h>

#include <random>

#include "maxflow/quantity.hpp"

using maxflow::Quantity;

namespace {

Quantity dy(long long m, int s) { return Quantity::dyadic(Quantity::Int(m), s); }

}  // namespace

TEST_CASE("quantity canonical form") {
  Quantity q = dy(12, 3);  // 12/8 = 3/2
  CHECK(q.mantissa() == 3);
  CHECK(q.shift() == 1);
  CHECK(dy(0, 9).shift() == 0);
  CHECK(dy(16, 4) == Quantity(1));
  CHECK(Quantity::pow2(-3) == dy(1, 3));
  CHECK(Quantity::pow2(5) == Quantity(32));
}

TEST_CASE("quantity exact arithmetic") {
  Quantity a = dy(3, 1), b = dy(5, 2);  // 1.5 and 1.25
  CHECK((a + b) == dy(11, 2));
  CHECK((a - b) == dy(1, 2));
  CHECK((a * b) == dy(15, 3));
  CHECK(a.half() == dy(3, 2));
  CHECK(a.mul_pow2(3) == Quantity(12));
  CHECK((a + b).str() == "2.75");
  CHECK((-a).str() == "-1.5");
  CHECK(b > a - Quantity(1));
  CHECK(min(a, b) == b);
  CHECK(max(a, b) == a);
}

TEST_CASE("quantity floor, mod and powers of two") {
  CHECK(dy(7, 1).floor() == Quantity(3));
  CHECK(dy(-7, 1).floor() == Quantity(-4));
  CHECK(dy(-7, 1).ceil() == Quantity(-3));
  CHECK(Quantity(13).mod(Quantity(4)) == Quantity(1));
  CHECK(Quantity(-13).mod(Quantity(4)) == Quantity(3));
  CHECK(dy(13, 2).mod(dy(1, 1)) == dy(1, 2));
  CHECK(Quantity(13).floor_multiple(Quantity(4)) == Quantity(12));
  CHECK(Quantity(12).ceil_pow2() == Quantity(16));
  CHECK(Quantity(16).ceil_pow2() == Quantity(16));
  CHECK(dy(3, 4).ceil_pow2() == dy(1, 2));
  CHECK(Quantity(64).is_pow2());
  CHECK_FALSE(Quantity(48).is_pow2());
  CHECK(dy(1, 7).is_pow2());
  CHECK(dy(1, 7).log2_exact() == -7);
  CHECK(Quantity(100).floor_log2() == 6);
}

TEST_CASE("quantity conversion to capacity") {
  maxflow::cap_t big = static_cast<maxflow::cap_t>(1) << 100;
  CHECK(Quantity(big).to_cap() == big);
  CHECK(Quantity(-big).to_cap() == -big);
  CHECK_THROWS(dy(1, 1).to_cap());
}

TEST_CASE("quantity shift cap is enforced") {
  CHECK_NOTHROW(Quantity::pow2(-Quantity::kDefaultShiftCap));
  CHECK_THROWS_AS(Quantity::pow2(-Quantity::kDefaultShiftCap - 1), std::logic_error);
}

TEST_CASE("quantity add then subtract round-trips") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> mant(-1'000'000'000LL, 1'000'000'000LL);
  std::uniform_int_distribution<int> shift(0, 80);
  for (int i = 0; i < 2000; ++i) {
    Quantity a = dy(mant(rng), shift(rng)), b = dy(mant(rng), shift(rng));
    CHECK((a + b - b) == a);
    CHECK((a - b + b) == a);
    CHECK(((a + b) <=> a) == (b <=> Quantity(0)));
  }
}
