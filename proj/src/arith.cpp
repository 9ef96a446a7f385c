#include "amv/arith.hpp"

#include <regex>

#include "amv/detail/grow_table.hpp"
#include "amv/errors.hpp"

namespace amv {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  static const std::regex pattern(R"(^\s*(-?\d+)(?:\s*/\s*(-?\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw DomainError("not a rational: '" + text + "'");
  const Integer num(m[1].str());
  const Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Integer Rational::to_integer() const {
  if (!is_integer()) throw std::domain_error("not an integer: " + str());
  return q_.get_num();
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(n, d);
}

Integer pow(const Integer& base, unsigned exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return r;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

Integer binomial(unsigned n, long i) {
  if (i < 0 || i > static_cast<long>(n)) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(i));
  return r;
}

namespace {
detail::GrowTable<std::vector<Integer>>& pascal_table() {
  static detail::GrowTable<std::vector<Integer>> table;
  return table;
}
} // namespace

std::shared_ptr<const std::vector<std::vector<Integer>>> pascal_rows(unsigned n) {
  return pascal_table().at_least(n + 1, [](std::vector<std::vector<Integer>>& rows, std::size_t size) {
    while (rows.size() < size) {
      const std::size_t m = rows.size();
      std::vector<Integer> row(m + 1, 1);
      for (std::size_t i = 1; i < m; ++i) row[i] = rows[m - 1][i - 1] + rows[m - 1][i];
      rows.push_back(std::move(row));
    }
  });
}

std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
  }
  return primes;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(long m) {
  std::vector<std::uint64_t> out;
  std::uint64_t v = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint64_t lucas_binomial_mod(std::uint64_t n, std::uint64_t i, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("lucas_binomial_mod: modulus " + std::to_string(p) + " is not prime");
  std::uint64_t result = 1;
  while ((n > 0 || i > 0) && result != 0) {
    const std::uint64_t nd = n % p;
    const std::uint64_t id = i % p;
    if (id > nd) return 0;
    const Integer digit = binomial(static_cast<unsigned>(nd), static_cast<long>(id)) % Integer(p);
    result = (result * digit.get_ui()) % p;
    n /= p;
    i /= p;
  }
  return result;
}

namespace {
long valuation_of(Integer v, std::uint64_t p) {
  long e = 0;
  while (v != 0 && mpz_divisible_ui_p(v.get_mpz_t(), p)) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    ++e;
  }
  return e;
}
} // namespace

long p_adic_valuation(const Rational& q, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("p_adic_valuation: " + std::to_string(p) + " is not prime");
  if (q.is_zero()) throw DomainError("p_adic_valuation of zero is undefined");
  return valuation_of(q.num(), p) - valuation_of(q.den(), p);
}

bool is_p_integral(const Rational& q, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("is_p_integral: " + std::to_string(p) + " is not prime");
  return !mpz_divisible_ui_p(q.raw().get_den_mpz_t(), p);
}

} // namespace amv
