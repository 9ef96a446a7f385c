#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "amv/arith.hpp"
#include "amv/errors.hpp"
#include "amv/gy.hpp"
#include "oracles.hpp"

using namespace amv;

namespace {

// ((e^{hx}-1)^j/j!) * kx/(e^{kx}-1) from the Stirling and Bernoulli oracles:
// the first factor has r_m = h^m S(m,j), the second r_i = k^i B_i.
Rational gy_oracle(unsigned n, unsigned j, long h, long k) {
  const auto s = oracle::stirling_table(std::max(n, j));
  const auto b = oracle::bernoulli_ops(n);
  const auto c = oracle::pascal(n);
  Rational acc(0);
  for (unsigned m = 0; m <= n; ++m)
    acc += Rational(c[n][m] * pow(Integer(h), m) * s[m][j] * pow(Integer(k), n - m)) * b[n - m];
  return acc;
}

} // namespace

TEST_SUITE("gy") {

TEST_CASE("hand-checked coefficients") {
  CHECK(gy_coefficient(3, {2, 1, 1}) == Rational(Integer(3), Integer(2)));
  CHECK(gy_coefficient(5, {3, 1, 2}) == Rational(Integer(5), Integer(3)));
  CHECK(gy_coefficient(1, {2, 1, 1}) == Rational(0));
  CHECK(gy_coefficient(2, {2, 1, 1}) == Rational(1));
  CHECK_THROWS_AS(gy_coefficient(2, {0, 1, 1}), DomainError);
  CHECK_THROWS_AS(gy_coefficient(2, {1, 1, 0}), DomainError);
}

TEST_CASE("sum, series and oracle agree") {
  for (unsigned j = 1; j <= 5; ++j)
    for (long h = -4; h <= 4; ++h)
      for (long k = -3; k <= 4; ++k) {
        if (k == 0) continue;
        const GyQuery q{j, h, k};
        const EgfSeries s = gy_series(q, 14);
        for (unsigned n = 0; n <= 14; ++n) {
          const Rational v = gy_coefficient(n, q);
          REQUIRE(v == s[n]);
          REQUIRE(v == gy_oracle(n, j, h, k));
        }
      }
}

TEST_CASE("prime condition") {
  CHECK(gam_condition({1, 1, 1}));
  CHECK_FALSE(gam_condition({2, 1, 1}));
  CHECK(gam_condition({2, 2, 1}));
  CHECK(gam_condition({6, 2, 3}));
  CHECK_FALSE(gam_condition({6, 2, 5}));
  CHECK(gam_condition({4, 1, -2}));
}

TEST_CASE("sufficiency: prime condition gives a Hurwitz series") {
  for (unsigned j = 1; j <= 6; ++j)
    for (long h = -6; h <= 6; ++h)
      for (long k = 1; k <= 6; ++k) {
        const GyQuery q{j, h, k};
        if (!gam_condition(q)) continue;
        REQUIRE_FALSE(is_hurwitz(gy_series(q, 24)));
      }
}

TEST_CASE("necessity witness") {
  const NecessityWitness w = nec_witness(2, 1, 1, 2);
  CHECK(w.n_star == 3);
  CHECK(w.coefficient == Rational(Integer(3), Integer(2)));
  CHECK(w.valuation == -1);
  CHECK(w.lucas_residue == 1);
  const auto json = nlohmann::json::parse(w.to_json());
  CHECK(json["coefficient"] == "3/2");
  CHECK(json["n_star"] == 3);
  CHECK(json["p"] == 2);

  CHECK_THROWS_AS(nec_witness(2, 2, 1, 2), DomainError);
  CHECK_THROWS_AS(nec_witness(3, 1, 1, 2), DomainError);
  CHECK_THROWS_AS(nec_witness(4, 1, 1, 4), DomainError);
}

TEST_CASE("property: every violating prime yields a negative valuation at j+p-1") {
  for (unsigned j = 1; j <= 8; ++j)
    for (long h = -8; h <= 8; ++h)
      for (long k = 1; k <= 8; ++k)
        for (auto p : prime_factors(static_cast<long>(j))) {
          if (divides(p, h) || divides(p, k)) continue;
          const NecessityWitness w = nec_witness(j, h, k, p);
          REQUIRE(w.valuation < 0);
          REQUIRE(w.lucas_residue % p != 0);
          // the independent oracle sees the same coefficient
          REQUIRE(w.coefficient == gy_oracle(w.n_star, j, h, k));
        }
}

} // TEST_SUITE
