#include "amv/bernoulli.hpp"

#include "amv/arith.hpp"
#include "amv/detail/grow_table.hpp"
#include "amv/errors.hpp"

namespace amv {

namespace {

detail::GrowTable<Rational>& bernoulli_table() {
  static detail::GrowTable<Rational> table;
  return table;
}

detail::GrowTable<std::shared_ptr<const std::vector<Rational>>>& euler_rows() {
  static detail::GrowTable<std::shared_ptr<const std::vector<Rational>>> table;
  return table;
}

// Horner evaluation of sum_m c[m] u^m.
Rational horner(const std::vector<Rational>& c, const Rational& u) {
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
  return acc;
}

} // namespace

std::shared_ptr<const std::vector<Rational>> bernoulli_numbers(unsigned N) {
  return bernoulli_table().at_least(N + 1, [](std::vector<Rational>& b, std::size_t size) {
    if (b.empty()) b.emplace_back(1);
    while (b.size() < size) {
      const unsigned n = static_cast<unsigned>(b.size());
      if (n > 1 && n % 2 == 1) {
        b.emplace_back(0);
        continue;
      }
      // C(n+1, n) B_n = -sum_{i<n} C(n+1, i) B_i
      Rational acc(0);
      for (unsigned i = 0; i < n; ++i)
        if (!b[i].is_zero()) acc += Rational(binomial(n + 1, i)) * b[i];
      b.push_back(-acc / Rational(static_cast<long>(n + 1)));
    }
  });
}

Rational bernoulli(unsigned n) { return (*bernoulli_numbers(n))[n]; }

Rational bernoulli_poly(unsigned n, const Rational& u) {
  const auto b = bernoulli_numbers(n);
  // coefficient of u^m is C(n, n-m) B_{n-m}
  std::vector<Rational> c(n + 1);
  for (unsigned m = 0; m <= n; ++m) c[m] = Rational(binomial(n, n - m)) * (*b)[n - m];
  return horner(c, u);
}

Rational bernoulli_tilde(unsigned n, const Rational& u) { return bernoulli_poly(n, u) - bernoulli(n); }

Rational euler_at_zero(unsigned n) {
  const Rational two_pow = Rational(pow(Integer(2), n + 1));
  return Rational(2) * (Rational(1) - two_pow) * bernoulli(n + 1) / Rational(static_cast<long>(n + 1));
}

std::shared_ptr<const std::vector<Rational>> euler_poly_coeffs(unsigned n) {
  const auto rows = euler_rows().at_least(n + 1, [](auto& table, std::size_t size) {
    while (table.size() < size) {
      const unsigned d = static_cast<unsigned>(table.size());
      // Appell expansion: E_d(u) = sum_k C(d,k) E_k(0) u^{d-k}
      auto row = std::make_shared<std::vector<Rational>>(d + 1);
      for (unsigned m = 0; m <= d; ++m) (*row)[m] = Rational(binomial(d, d - m)) * euler_at_zero(d - m);
      table.push_back(std::move(row));
    }
  });
  return (*rows)[n];
}

Rational euler_poly(unsigned n, const Rational& u) { return horner(*euler_poly_coeffs(n), u); }

Integer stirling2(unsigned n, unsigned j) {
  if (j > n) return 0;
  // row-by-row recurrence S(m,k) = k S(m-1,k) + S(m-1,k-1)
  std::vector<Integer> row(j + 1, 0);
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned k = std::min(m, j); k >= 1; --k) row[k] = Integer(k) * row[k] + row[k - 1];
    row[0] = 0;
  }
  return row[j];
}

VscDecomposition von_staudt_clausen(unsigned n) {
  if (n < 2 || n % 2 != 0) throw DomainError("von_staudt_clausen: n must be even and >= 2, got " + std::to_string(n));
  VscDecomposition d{n, 0, {}};
  Rational acc = bernoulli(n);
  for (auto p : primes_upto(n + 1)) {
    if (n % (p - 1) != 0) continue;
    d.primes.push_back(p);
    acc += Rational(1, Integer(p));
  }
  if (!acc.is_integer())
    throw TheoremViolation("von Staudt-Clausen", "n=" + std::to_string(n), acc.str());
  d.integer_part = acc.to_integer();
  return d;
}

} // namespace amv
