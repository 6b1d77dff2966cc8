#define MMK_TEST_MAIN
#include "test_util.hpp"

#include <random>

#include "mmk/codec/natural.hpp"
#include "mmk/codec/primes.hpp"

using mmk::codec::Natural;
using mmk::codec::nth_prime;

TEST_CASE("decimal round trip") {
  CHECK(Natural(0).to_decimal() == "0");
  CHECK(Natural(1).to_decimal() == "1");
  CHECK(Natural(1000000000).to_decimal() == "1000000000");
  CHECK(Natural::from_decimal("20662426080").to_uint64() == 20662426080ull);

  std::mt19937_64 rng(mmk::testutil::g_seed);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t v = rng();
    CHECK(Natural::from_decimal(std::to_string(v)).to_uint64() == v);
    CHECK(Natural(v).to_decimal() == std::to_string(v));
  }
  CHECK_THROWS_AS(Natural::from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(Natural::from_decimal("12a"), std::invalid_argument);
}

TEST_CASE("arithmetic against 64-bit reference") {
  std::mt19937_64 rng(mmk::testutil::g_seed + 1);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t a = rng() % (1ull << 31), b = rng() % (1ull << 31);
    CHECK((Natural(a) + Natural(b)).to_uint64() == a + b);
    CHECK((Natural(a) * Natural(b)).to_uint64() == a * b);
  }
}

TEST_CASE("multiplication carries across limbs") {
  // (2^64 - 1)^2 = 2^128 - 2^65 + 1
  Natural big = Natural::from_decimal("18446744073709551615");
  CHECK((big * big).to_decimal() == "340282366920938463426481119284349108225");
  Natural shifted = Natural::pow(Natural(2), 100);
  CHECK(shifted.to_decimal() == "1267650600228229401496703205376");
  CHECK(shifted.bit_length() == 101);
}

TEST_CASE("pow matches repeated multiplication") {
  std::mt19937_64 rng(mmk::testutil::g_seed + 2);
  for (int i = 0; i < 50; ++i) {
    std::uint64_t base = 2 + rng() % 30;
    std::uint64_t exp = rng() % 12;
    Natural expected(1);
    for (std::uint64_t k = 0; k < exp; ++k) expected *= Natural(base);
    CHECK(Natural::pow(Natural(base), exp) == expected);
  }
  CHECK(Natural::pow(Natural(7), 0).is_one());
}

TEST_CASE("divmod by a small divisor") {
  std::mt19937_64 rng(mmk::testutil::g_seed + 3);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t v = rng();
    std::uint32_t d = 1 + static_cast<std::uint32_t>(rng() % 100000);
    Natural n(v);
    std::uint32_t r = n.divmod_small(d);
    CHECK(r == v % d);
    CHECK(n.to_uint64() == v / d);
  }
  Natural big = Natural::pow(Natural(3), 200);
  Natural copy = big;
  CHECK(copy.divmod_small(3) == 0);
  CHECK(copy == Natural::pow(Natural(3), 199));
}

TEST_CASE("comparison is a total order on samples") {
  std::mt19937_64 rng(mmk::testutil::g_seed + 4);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t a = rng(), b = rng();
    CHECK((Natural(a) < Natural(b)) == (a < b));
    CHECK((Natural(a) == Natural(b)) == (a == b));
  }
  CHECK(Natural(0) < Natural(1));
  CHECK(Natural::pow(Natural(2), 64) > Natural(UINT64_MAX));
}

TEST_CASE("nth_prime against an independent sieve") {
  auto primes = mmk::testutil::sieve_primes(2000000);
  CHECK(nth_prime(1) == 2);
  CHECK(nth_prime(5) == 11);
  CHECK(nth_prime(100) == 541);
  for (std::uint32_t i : {1u, 2u, 10u, 100u, 1000u, 10000u, 50000u})
    CHECK(nth_prime(i) == primes[i - 1]);
  CHECK(nth_prime(10000) == 104729);
}
