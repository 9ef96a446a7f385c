#include <doctest.h>

#include <random>

#include "amv/bernoulli.hpp"
#include "amv/egf.hpp"
#include "amv/errors.hpp"
#include "oracles.hpp"

using namespace amv;

namespace {

EgfSeries ints(std::initializer_list<long> v) {
  std::vector<Rational> c;
  for (long x : v) c.emplace_back(x);
  return EgfSeries(std::move(c));
}

EgfSeries em1(long a, std::size_t order) { return sub(exp_linear(a, order), constant(1, order)); }

} // namespace

TEST_SUITE("egf") {

TEST_CASE("exp_linear") {
  CHECK(exp_linear(0, 3) == ints({1, 0, 0, 0}));
  CHECK(exp_linear(1, 3) == ints({1, 1, 1, 1}));
  CHECK(exp_linear(-2, 3) == ints({1, -2, 4, -8}));
}

TEST_CASE("add, sub and scale") {
  CHECK(add(exp_linear(1, 5), scale(-1, exp_linear(1, 5))).is_zero());
  CHECK(scale(2, exp_linear(1, 3)) == ints({2, 2, 2, 2}));
  CHECK(sub(exp_linear(2, 4), constant(1, 4)) == ints({0, 2, 4, 8, 16}));
  // mismatched orders truncate to the smaller one
  CHECK(add(exp_linear(1, 6), exp_linear(1, 3)).order() == 3);
}

TEST_CASE("mul is the binomial convolution") {
  CHECK(mul(exp_linear(1, 6), exp_linear(1, 6)) == exp_linear(2, 6));
  const EgfSeries f = ints({3, -1, 4, 1, -5, 9});
  CHECK(mul(f, constant(1, 5)) == f);
  CHECK(mul(exp_linear(3, 8), exp_linear(-5, 8)) == exp_linear(-2, 8));
}

TEST_CASE("shift_down rescales by factorial ratios") {
  // x e^x has r_n = n, so dividing by x gives e^x
  EgfSeries xe = mul(x_power(1, 6), exp_linear(1, 6));
  CHECK(xe == ints({0, 1, 2, 3, 4, 5, 6}));
  CHECK(shift_down(xe, 1) == exp_linear(1, 5));
  CHECK_THROWS_AS(shift_down(exp_linear(1, 4), 1), DomainError);
}

TEST_CASE("div") {
  const EgfSeries xe = mul(x_power(1, 8), exp_linear(1, 8));
  CHECK(div(xe, x_power(1, 8)) == exp_linear(1, 7));

  // 2x/(e^x+1): Genocchi numbers, r_8 = 17
  const EgfSeries genocchi = div(scale(2, x_power(1, 10)), add(exp_linear(1, 10), constant(1, 10)));
  CHECK(genocchi[8] == Rational(17));
  CHECK(genocchi == ints({0, 1, -1, 0, 1, 0, -3, 0, 17, 0, -155}));

  // (e^{3x}-1)/(e^x-1) = 1 + e^x + e^{2x}
  const EgfSeries q = div(em1(3, 9), em1(1, 9));
  CHECK(q == add(add(exp_linear(0, 8), exp_linear(1, 8)), exp_linear(2, 8)));
  CHECK(q.truncate(4) == ints({3, 3, 5, 9, 17}));

  CHECK_THROWS_AS(div(exp_linear(1, 5), EgfSeries(5)), DomainError);
  CHECK_THROWS_AS(div(exp_linear(1, 5), x_power(1, 5)), DomainError);
  CHECK(div(EgfSeries(5), x_power(1, 5)).is_zero());
}

TEST_CASE("division inverts multiplication") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    const EgfSeries f = oracle::random_series(rng, 14, 30);
    EgfSeries g = oracle::random_series(rng, 14, 30);
    if (g[0].is_zero()) g[0] = 1;
    CHECK(div(mul(f, g), g) == f);
    // with a common x^2 factor the result loses two orders
    const EgfSeries g2 = mul(x_power(2, 14), g);
    CHECK(div(mul(f, g2), g2) == f.truncate(12));
  }
}

TEST_CASE("divided_power") {
  for (unsigned j = 0; j <= 7; ++j) {
    const EgfSeries s = divided_power(em1(1, 12), j);
    const auto table = oracle::stirling_table(12);
    for (unsigned n = 0; n <= 12; ++n) REQUIRE(s[n] == Rational(table[n][j]));
  }
  CHECK(divided_power(em1(1, 5), 2)[3] == Rational(3));
  CHECK(divided_power(x_power(1, 5), 2) == ints({0, 0, 1, 0, 0, 0}));
  CHECK_THROWS_AS(divided_power(exp_linear(1, 5), 2), DomainError);
}

TEST_CASE("log1p") {
  const EgfSeries x = x_power(1, 12);
  CHECK(log1p(em1(1, 12)) == x);
  CHECK(log1p(em1(7, 12)) == scale(7, x));
  // Mercator series: r_n = (-1)^{n-1} (n-1)!
  const EgfSeries l = log1p(x);
  CHECK(l[0] == Rational(0));
  for (unsigned n = 1; n <= 12; ++n) CHECK(l[n] == Rational(Integer(sign_power(n - 1) * oracle::factorial(n - 1))));
  CHECK_THROWS_AS(log1p(exp_linear(1, 4)), DomainError);
}

TEST_CASE("log1p of e^{ax}-1 is ax for |a| <= 10, N <= 25") {
  for (long a = -10; a <= 10; ++a)
    for (std::size_t order : {1u, 7u, 25u}) REQUIRE(log1p(em1(a, order)) == scale(Rational(a), x_power(1, order)));
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(exp_linear(1, 10)) == exp_linear(-1, 10));
  CHECK(reciprocal(ints({1, 1, 0, 0, 0, 0})) == ints({1, -1, 2, -6, 24, -120}));
  CHECK_THROWS_AS(reciprocal(x_power(1, 3)), DomainError);

  // (e^x+1)/2 is not Hurwitz and neither is its reciprocal; it is 2/(e^x+1)
  const EgfSeries half1 = scale(Rational(1, 2), add(exp_linear(1, 10), constant(1, 10)));
  const EgfSeries r1 = reciprocal(half1);
  CHECK(r1 == div(constant(2, 10), add(exp_linear(1, 10), constant(1, 10))));
  CHECK(r1[1] == Rational(Integer(-1), Integer(2)));
  for (unsigned n = 0; n <= 10; ++n) CHECK(r1[n] == euler_at_zero(n));

  // (e^{2x}+1)/2 has integer coefficients and unit constant term
  const EgfSeries half2 = scale(Rational(1, 2), add(exp_linear(2, 16), constant(1, 16)));
  CHECK_FALSE(is_hurwitz(half2));
  CHECK_FALSE(is_hurwitz(reciprocal(half2)));
}

TEST_CASE("is_hurwitz") {
  CHECK_FALSE(is_hurwitz(exp_linear(2, 10)).has_value());
  EgfSeries f = exp_linear(1, 5);
  f[3] = Rational(3, 2);
  const auto bad = is_hurwitz(f);
  REQUIRE(bad.has_value());
  CHECK(bad->index == 3);
  CHECK(bad->value == Rational(3, 2));
}

TEST_CASE("property: Hurwitz closure and ring axioms on random integer series") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 60; ++t) {
    const EgfSeries f = oracle::random_series(rng, 20, 50);
    const EgfSeries g = oracle::random_series(rng, 20, 50);
    const EgfSeries h = oracle::random_series(rng, 20, 50);

    CHECK_FALSE(is_hurwitz(add(f, g)));
    CHECK_FALSE(is_hurwitz(sub(f, g)));
    CHECK_FALSE(is_hurwitz(mul(f, g)));
    CHECK(mul(f, g) == oracle::ops_mul(f, g));
    CHECK(mul(f, g) == mul(g, f));
    CHECK(mul(mul(f, g), h) == mul(f, mul(g, h)));

    EgfSeries f0 = f;
    f0[0] = 0;
    for (unsigned j = 1; j <= 6; ++j) {
      const EgfSeries dp = divided_power(f0, j);
      CHECK_FALSE(is_hurwitz(dp));
      const auto v = dp.valuation();
      CHECK((!v || *v >= j));
    }
    EgfSeries unit = g;
    unit[0] = 1;
    CHECK_FALSE(is_hurwitz(reciprocal(unit)));
    CHECK(mul(unit, reciprocal(unit)) == constant(1, 20));
  }
}

TEST_CASE("EGF route to Bernoulli numbers matches the recurrence") {
  const EgfSeries b = div(x_power(1, 41), em1(1, 41));
  const auto rec = bernoulli_numbers(40);
  for (unsigned n = 0; n <= 40; ++n) REQUIRE(b[n] == (*rec)[n]);
}

} // TEST_SUITE
