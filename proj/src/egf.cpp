#include "amv/egf.hpp"

#include <algorithm>

#include "amv/arith.hpp"
#include "amv/errors.hpp"

namespace amv {

EgfSeries::EgfSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

std::optional<std::size_t> EgfSeries::valuation() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (!coeffs_[n].is_zero()) return n;
  return std::nullopt;
}

EgfSeries EgfSeries::truncate(std::size_t order) const {
  const std::size_t keep = std::min(order, this->order()) + 1;
  return EgfSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + keep));
}

EgfSeries exp_linear(const Rational& a, std::size_t order) {
  EgfSeries f(order);
  Rational p(1);
  for (std::size_t n = 0; n <= order; ++n) {
    f[n] = p;
    p *= a;
  }
  return f;
}

EgfSeries constant(const Rational& c, std::size_t order) {
  EgfSeries f(order);
  f[0] = c;
  return f;
}

EgfSeries x_power(std::size_t m, std::size_t order) {
  EgfSeries f(order);
  if (m <= order) {
    Integer fact(1);
    for (std::size_t i = 2; i <= m; ++i) fact *= static_cast<unsigned long>(i);
    f[m] = Rational(fact);
  }
  return f;
}

EgfSeries add(const EgfSeries& f, const EgfSeries& g) {
  EgfSeries r(std::min(f.order(), g.order()));
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] = f[n] + g[n];
  return r;
}

EgfSeries sub(const EgfSeries& f, const EgfSeries& g) {
  EgfSeries r(std::min(f.order(), g.order()));
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] = f[n] - g[n];
  return r;
}

EgfSeries scale(const Rational& c, const EgfSeries& f) {
  EgfSeries r(f.order());
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] = c * f[n];
  return r;
}

EgfSeries mul(const EgfSeries& f, const EgfSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  const auto rows = pascal_rows(static_cast<unsigned>(order));
  EgfSeries r(order);
  mpq_class acc, term;
  for (std::size_t n = 0; n <= order; ++n) {
    acc = 0;
    const auto& row = (*rows)[n];
    for (std::size_t i = 0; i <= n; ++i) {
      if (f[i].is_zero() || g[n - i].is_zero()) continue;
      term = f[i].raw() * g[n - i].raw();
      term *= row[i];
      acc += term;
    }
    r[n] = Rational(acc);
  }
  return r;
}

EgfSeries shift_down(const EgfSeries& f, std::size_t m) {
  if (m == 0) return f;
  if (m > f.order()) throw DomainError("shift_down: shift exceeds series order");
  for (std::size_t n = 0; n < m; ++n)
    if (!f[n].is_zero()) throw DomainError("shift_down: series not divisible by x^" + std::to_string(m));
  EgfSeries r(f.order() - m);
  // n!/(n+m)! = 1/((n+1)(n+2)...(n+m))
  for (std::size_t n = 0; n <= r.order(); ++n) {
    Integer rising(1);
    for (std::size_t t = n + 1; t <= n + m; ++t) rising *= static_cast<unsigned long>(t);
    r[n] = f[n + m] / Rational(rising);
  }
  return r;
}

namespace {
// f / g where g_0 != 0; order min(order f, order g).
EgfSeries div_unit(const EgfSeries& f, const EgfSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  const auto rows = pascal_rows(static_cast<unsigned>(order));
  EgfSeries q(order);
  const mpq_class inv_g0 = 1 / g[0].raw();
  mpq_class acc, term;
  for (std::size_t n = 0; n <= order; ++n) {
    acc = f[n].raw();
    const auto& row = (*rows)[n];
    for (std::size_t i = 0; i < n; ++i) {
      if (q[i].is_zero() || g[n - i].is_zero()) continue;
      term = q[i].raw() * g[n - i].raw();
      term *= row[i];
      acc -= term;
    }
    acc *= inv_g0;
    q[n] = Rational(acc);
  }
  return q;
}
} // namespace

EgfSeries div(const EgfSeries& f, const EgfSeries& g) {
  const auto vg = g.valuation();
  if (!vg) throw DomainError("div: division by the zero series");
  const auto vf = f.valuation();
  if (vf && *vf < *vg) throw DomainError("div: val(g) > val(f)");
  if (*vg > f.order()) throw DomainError("div: dividend order too small for the divisor's valuation");
  return div_unit(shift_down(f, *vg), shift_down(g, *vg));
}

EgfSeries reciprocal(const EgfSeries& f) {
  if (f[0].is_zero()) throw DomainError("reciprocal: constant term is zero");
  return div_unit(constant(1, f.order()), f);
}

EgfSeries divided_power(const EgfSeries& f, unsigned j) {
  if (!f[0].is_zero()) throw DomainError("divided_power: constant term must be zero");
  EgfSeries acc = constant(1, f.order());
  for (unsigned i = 1; i <= j; ++i) acc = scale(Rational(1, i), mul(acc, f));
  return acc;
}

EgfSeries log1p(const EgfSeries& f) {
  if (!f[0].is_zero()) throw DomainError("log1p: constant term must be zero");
  const std::size_t order = f.order();
  EgfSeries sum(order);
  EgfSeries power = f;
  for (std::size_t j = 1; j <= order; ++j) {
    const Rational c(sign_power(static_cast<long>(j) - 1), static_cast<long>(j));
    sum = add(sum, scale(c, power));
    if (j < order) power = mul(power, f);
  }
  return sum;
}

std::optional<NonIntegral> is_hurwitz(const EgfSeries& f) {
  for (std::size_t n = 0; n <= f.order(); ++n)
    if (!f[n].is_integer()) return NonIntegral{n, f[n]};
  return std::nullopt;
}

} // namespace amv
