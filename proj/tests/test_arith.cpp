#include <doctest.h>

#include <random>

#include "amv/arith.hpp"
#include "amv/errors.hpp"
#include "oracles.hpp"

using namespace amv;

TEST_SUITE("arith") {

TEST_CASE("rational normalizes at construction") {
  const Rational r(Integer(6), Integer(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(Integer(0), Integer(-7)).den() == 1);
  CHECK(Rational::parse("-691/2730") == Rational(Integer(-691), Integer(2730)));
  CHECK(Rational::parse("12/4").str() == "3");
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/"), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("floor and frac follow the [0,1) convention") {
  CHECK(floor(Rational(Integer(-1), Integer(3))) == -1);
  CHECK(frac(Rational(Integer(-1), Integer(3))) == Rational(Integer(2), Integer(3)));
  CHECK(frac(Rational(Integer(7), Integer(2))) == Rational(1, 2));
  CHECK(frac(Rational(-4)).is_zero());
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(8, 6) == 28);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);

  const auto table = oracle::pascal(40);
  const auto rows = pascal_rows(40);
  for (unsigned n = 0; n <= 40; ++n)
    for (unsigned i = 0; i <= n; ++i) {
      REQUIRE(binomial(n, i) == table[n][i]);
      REQUIRE((*rows)[n][i] == table[n][i]);
    }
}

TEST_CASE("primes_upto") {
  CHECK(primes_upto(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_upto(1).empty());
  CHECK(primes_upto(0).empty());
  CHECK(primes_upto(30) == oracle::trial_division_primes(30));
  CHECK(primes_upto(500) == oracle::trial_division_primes(500));
  CHECK(prime_factors(-60) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_factors(1).empty());
  CHECK(prime_factors(8) == std::vector<std::uint64_t>{2});
}

TEST_CASE("lucas_binomial_mod") {
  CHECK(lucas_binomial_mod(8, 6, 3) == 1);
  CHECK(lucas_binomial_mod(5, 0, 7) == 1);
  CHECK(lucas_binomial_mod(7, 3, 2) == 1);
  CHECK(lucas_binomial_mod(4, 7, 5) == 0);
  CHECK_THROWS_AS(lucas_binomial_mod(8, 6, 4), DomainError);
  CHECK_THROWS_AS(lucas_binomial_mod(8, 6, 1), DomainError);

  // agreement with C(n,i) mod p on the whole grid
  for (auto p : primes_upto(31))
    for (unsigned n = 0; n <= 64; ++n)
      for (unsigned i = 0; i <= n; ++i) {
        const Integer expected = binomial(n, i) % Integer(p);
        REQUIRE(lucas_binomial_mod(n, i, p) == expected.get_ui());
      }
}

TEST_CASE("p-adic valuation and p-integrality") {
  CHECK(p_adic_valuation(Rational(3, 2), 2) == -1);
  CHECK(p_adic_valuation(Rational(Integer(1), Integer(6)), 3) == -1);
  CHECK(p_adic_valuation(Rational(28), 2) == 2);
  CHECK(p_adic_valuation(Rational(-5), 3) == 0);
  CHECK_THROWS_AS(p_adic_valuation(Rational(0), 2), DomainError);
  CHECK_THROWS_AS(p_adic_valuation(Rational(3), 6), DomainError);

  CHECK_FALSE(is_p_integral(Rational(3, 2), 2));
  CHECK(is_p_integral(Rational(3, 2), 3));
  CHECK_FALSE(is_p_integral(Rational(Integer(-691), Integer(2730)), 7));
  CHECK(is_p_integral(Rational(0), 5));
  CHECK_THROWS_AS(is_p_integral(Rational(1), 9), DomainError);
}

TEST_CASE("property: exact rational round trips and unit normalization") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> small(-1000000, 1000000);
  const Integer big = pow(Integer(10), 40) + 7;
  const auto primes = primes_upto(31);
  for (int trial = 0; trial < 300; ++trial) {
    long an = small(rng), ad = small(rng), cn = small(rng), cd = small(rng);
    if (ad == 0) ad = 1;
    if (cd == 0) cd = 3;
    const Rational a(Integer(an) * big, Integer(ad));
    const Rational c(Integer(cn), Integer(cd) * big);
    REQUIRE((a + c) - c == a);
    if (!c.is_zero()) REQUIRE((a * c) / c == a);

    if (a.is_zero()) continue;
    for (auto p : primes) {
      const long v = p_adic_valuation(a, p);
      const Rational unit = a * (v >= 0 ? Rational(1) / Rational(pow(Integer(p), static_cast<unsigned>(v)))
                                        : Rational(pow(Integer(p), static_cast<unsigned>(-v))));
      REQUIRE(is_p_integral(unit, p));
      REQUIRE(is_p_integral(Rational(1) / unit, p));
    }
  }
}

} // TEST_SUITE
