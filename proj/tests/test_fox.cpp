#include <doctest.h>

#include "amv/bernoulli.hpp"
#include "amv/errors.hpp"
#include "amv/fox.hpp"
#include "oracles.hpp"

using namespace amv;

TEST_SUITE("fox") {

TEST_CASE("even s") {
  // s = 2, r = 0: 2^n E_n(0)
  const long zero_row[] = {1, -1, 0, 2, 0, -16, 0, 272};
  for (unsigned n = 0; n < 8; ++n) CHECK(fox_number({n, 0, 2}) == zero_row[n]);
  // s = 2, r = 1: 2^n E_n(1/2), the Euler numbers
  const auto e = oracle::euler_numbers(24);
  for (unsigned n = 0; n <= 24; ++n) REQUIRE(fox_number({n, 1, 2}) == e[n]);
  const long first[] = {1, 0, -1, 0, 5, 0, -61};
  for (unsigned n = 0; n < 7; ++n) CHECK(fox_number({n, 1, 2}) == first[n]);
}

TEST_CASE("odd s") {
  const long row[] = {0, 1, -1, -5, 11, 91, -301, -3485, 15371, 228811, -1261501};
  for (unsigned n = 0; n <= 10; ++n) CHECK(fox_number({n, 2, 3}) == row[n]);
  for (unsigned n = 1; n <= 30; ++n) REQUIRE(fox_number({n, 1, 1}) == 0);
  CHECK(fox_number({0, 1, 1}) == 1);
  CHECK(fox_number({0, 2, 1}) == 0);
}

TEST_CASE("series routes") {
  const EgfSeries even = fox_series_even(0, 2, 7);
  for (unsigned n = 0; n <= 7; ++n) CHECK(even[n] == fox_rational({n, 0, 2}));
  CHECK_FALSE(is_hurwitz(even));
  const EgfSeries odd = fox_series_odd(2, 3, 10);
  for (unsigned n = 0; n <= 10; ++n) CHECK(odd[n] == fox_rational({n, 2, 3}));
  CHECK_THROWS_AS(fox_series_even(1, 3, 5), DomainError);
  CHECK_THROWS_AS(fox_series_odd(1, 4, 5), DomainError);
  CHECK_THROWS_AS(fox_rational({2, 1, 0}), DomainError);
}

TEST_CASE("property: integrality, both routes and mirror symmetry") {
  for (long s = -7; s <= 7; ++s) {
    if (s == 0) continue;
    for (long r = -7; r <= 7; ++r) {
      const EgfSeries series = s % 2 == 0 ? fox_series_even(r, s, 18) : fox_series_odd(r, s, 18);
      REQUIRE_FALSE(is_hurwitz(series));
      for (unsigned n = 0; n <= 18; ++n) {
        const Rational v = fox_rational({n, r, s});
        REQUIRE(v.is_integer());
        REQUIRE(v == series[n]);
        REQUIRE(fox_original({n, r, s}).is_integer());
        REQUIRE(fox_rational({n, -r, -s}) == Rational(sign_power(n)) * v);
      }
    }
  }
}

TEST_CASE("original form is twice the halved one for odd s") {
  for (unsigned n = 0; n <= 12; ++n)
    for (long r = -4; r <= 4; ++r)
      for (long s : {1L, 3L, 5L, -3L}) REQUIRE(fox_original({n, r, s}) == Rational(2) * fox_rational({n, r, s}));
}

} // TEST_SUITE
