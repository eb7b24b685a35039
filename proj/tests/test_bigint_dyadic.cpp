#include <doctest.h>

#include <random>

#include "idemsplit/bigint.hpp"
#include "idemsplit/dyadic.hpp"

using namespace idemsplit;

TEST_CASE("bigint small arithmetic agrees with int64") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
  for (int t = 0; t < 5000; ++t) {
    std::int64_t a = dist(rng), b = dist(rng);
    CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
    CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
    CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
    CHECK((BigInt(a) <=> BigInt(b)) == (a <=> b));
  }
}

TEST_CASE("bigint shifts and carries cross limb boundaries") {
  BigInt one(1);
  BigInt big = one << 100;
  CHECK(big.to_decimal() == "1267650600228229401496703205376");
  CHECK((big >> 100) == one);
  CHECK(big.trailing_zero_bits() == 100);
  CHECK(big.bit_length() == 101);
  CHECK((big - BigInt(1)).bit_length() == 100);
  CHECK((big + (-big)).is_zero());
  BigInt minus = -big;
  CHECK(minus < BigInt(0));
  CHECK(minus.to_decimal() == "-1267650600228229401496703205376");
  CHECK((minus * minus) == (big * big));
}

TEST_CASE("bigint multiplication matches repeated addition across limbs") {
  BigInt x = (BigInt(1) << 70) + BigInt(12345);
  BigInt sum(0);
  for (int t = 0; t < 37; ++t) sum += x;
  CHECK(sum == x * BigInt(37));
}

TEST_CASE("dyadic normalization keeps exponent zero or numerator odd") {
  Dyadic d(BigInt(12), 4);  // 12/16 = 3/4
  CHECK(d.numerator() == BigInt(3));
  CHECK(d.exponent() == 2);
  CHECK(Dyadic(BigInt(0), 9) == Dyadic());
  Dyadic six(6, 0);  // integer with even numerator is already normal
  CHECK(six.numerator() == BigInt(6));
  CHECK(six.exponent() == 0);
}

TEST_CASE("dyadic ring arithmetic is exact") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> num(-200, 200);
  std::uniform_int_distribution<std::uint32_t> exp(0, 10);
  for (int t = 0; t < 3000; ++t) {
    Dyadic a(num(rng), exp(rng)), b(num(rng), exp(rng));
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == Dyadic());
    CHECK((a < b) == ((a - b).signum() < 0));
    CHECK(a.times_pow2(3).times_pow2(-3) == a);
    CHECK(a.times_pow2(-5).times_pow2(5) == a);
    CHECK(a * Dyadic(1, 1) == a.times_pow2(-1));
  }
}

TEST_CASE("dyadic rendering") {
  CHECK(Dyadic(3, 2).to_string() == "3/2^2");
  CHECK(Dyadic(-1, 1).to_string() == "-1/2^1");
  CHECK(Dyadic().to_string() == "0/2^0");
  CHECK(Dyadic(4, 2).to_string() == "1/2^0");
}
