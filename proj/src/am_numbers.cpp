#include "amv/am_numbers.hpp"

#include "amv/arith.hpp"
#include "amv/bernoulli.hpp"
#include "amv/errors.hpp"

namespace amv {

void AmQuery::validate() const {
  if (k == 0) throw DomainError("AmQuery: k must be nonzero");
}

std::string AmQuery::str() const {
  return "n=" + std::to_string(n) + " h=" + std::to_string(h) + " k=" + std::to_string(k);
}

namespace {

// sum_{i=0}^{top} C(n,i) B_i h^{n-i} k^i; top = n-1 gives M_n, top = n gives
// k^n B_n(h/k).
Rational homogeneous_bernoulli_sum(unsigned n, long h, long k, unsigned top) {
  const auto b = bernoulli_numbers(n);
  const Integer hh(h), kk(k);
  Rational acc(0);
  for (unsigned i = 0; i <= top && i <= n; ++i) {
    if ((*b)[i].is_zero()) continue;
    acc += Rational(Integer(binomial(n, i) * pow(hh, n - i) * pow(kk, i))) * (*b)[i];
  }
  return acc;
}

} // namespace

Rational m_rational(const AmQuery& q) {
  q.validate();
  if (q.n == 0) return Rational(0);
  return homogeneous_bernoulli_sum(q.n, q.h, q.k, q.n - 1);
}

Integer m_number(const AmQuery& q) {
  const Rational r = m_rational(q);
  if (!r.is_integer()) throw TheoremViolation("Almkvist-Meurman integrality", q.str(), r.str());
  return r.to_integer();
}

EgfSeries m_series(long h, long k, std::size_t order) {
  if (k == 0) throw DomainError("m_series: k must be nonzero");
  const std::size_t work = order + 1;
  const EgfSeries numer = scale(Rational(k), mul(x_power(1, work), sub(exp_linear(h, work), constant(1, work))));
  const EgfSeries denom = sub(exp_linear(k, work), constant(1, work));
  return div(numer, denom).truncate(order);
}

EgfSeries exp_geometric_quotient(long a, std::size_t order) {
  EgfSeries sum(order);
  const long terms = a >= 0 ? a : -a;
  for (long t = 0; t < terms; ++t) sum = add(sum, exp_linear(t, order));
  if (a < 0) sum = scale(-1, mul(exp_linear(a, order), sum));
  return sum;
}

EgfSeries m_log_route(long h, long k, std::size_t order) {
  if (k == 0) throw DomainError("m_log_route: k must be nonzero");
  const EgfSeries quotient_k = exp_geometric_quotient(k, order);
  const EgfSeries em1 = sub(exp_linear(1, order), constant(1, order));

  // a_j = (-1)^{j-1} (j-1)! (e^x-1)^j/j!, j = 1..N
  std::vector<EgfSeries> terms;
  terms.reserve(order);
  EgfSeries dp = constant(1, order);
  Integer fact(1);
  for (std::size_t j = 1; j <= order; ++j) {
    dp = scale(Rational(1, Integer(static_cast<unsigned long>(j))), mul(dp, em1));
    if (j > 1) fact *= static_cast<unsigned long>(j - 1);
    terms.push_back(scale(Rational(Integer(fact * sign_power(static_cast<long>(j) - 1))), dp));
  }

  // Horner in Q_k: a_1 + Q(a_2 + Q(a_3 + ...))
  EgfSeries acc(order);
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) acc = add(*it, mul(quotient_k, acc));

  return mul(acc, exp_geometric_quotient(h, order));
}

Integer a_number(unsigned n, long k) { return m_number(AmQuery{n, 1, k}); }

Rational VandiverDecomposition::reconstruct() const {
  Rational r(g);
  for (auto p : primes) r -= Rational(1, Integer(p));
  if (half_flag) r += Rational(1, 2);
  return r;
}

VandiverDecomposition vandiver_decompose(const AmQuery& q) {
  q.validate();
  if (q.n == 0) throw DomainError("vandiver_decompose: n must be positive");
  VandiverDecomposition d{q, 0, {}, false};
  Rational value = homogeneous_bernoulli_sum(q.n, q.h, q.k, q.n);
  Rational g = value;
  if (q.n % 2 == 0) {
    for (auto p : primes_upto(q.n + 1)) {
      if (q.n % (p - 1) != 0 || divides(p, q.k)) continue;
      d.primes.push_back(p);
      g += Rational(1, Integer(p));
    }
  } else if (q.n == 1 && q.k % 2 != 0) {
    d.half_flag = true;
    g -= Rational(1, 2);
  }
  if (!g.is_integer()) throw TheoremViolation("Vandiver", q.str(), g.str());
  d.g = g.to_integer();
  if (d.reconstruct() != value) throw TheoremViolation("Vandiver reconstruction", q.str(), d.reconstruct().str());
  return d;
}

ATable a_table(long k_min, long k_max, unsigned n_min, unsigned n_max) {
  if (k_min > k_max || n_min > n_max) throw DomainError("a_table: empty range");
  ATable t{k_min, k_max, n_min, n_max, {}};
  for (long k = k_min; k <= k_max; ++k) {
    if (k == 0) throw DomainError("a_table: k = 0 is not allowed");
    std::vector<Integer> row;
    for (unsigned n = n_min; n <= n_max; ++n) row.push_back(a_number(n, k));
    t.rows.push_back(std::move(row));
  }
  return t;
}

SignVerdict sign_class(unsigned n, long h, long k) {
  if (k <= 0) throw DomainError("sign_class: k must be positive");
  SignVerdict v{SignClaim::None, true, 0};
  if (n < 2) return v;
  v.value = m_number(AmQuery{n, h, k});
  const int signed_value = sign_power(static_cast<long>((n + 1) / 2)) * sgn(v.value);
  if (n % 2 == 1) {
    if (h > 0 && 2 * h < k) {
      v.claim = SignClaim::OddStrict;
      v.satisfied = signed_value > 0;
    }
  } else if (h > 0 && h < k) {
    v.claim = SignClaim::EvenStrict;
    v.satisfied = signed_value > 0;
  } else if (n % 4 == 0) {
    v.claim = SignClaim::QuarterNonneg;
    v.satisfied = sgn(v.value) >= 0;
  }
  return v;
}

const char* to_string(SignClaim c) {
  switch (c) {
  case SignClaim::None: return "none";
  case SignClaim::OddStrict: return "odd-strict";
  case SignClaim::EvenStrict: return "even-strict";
  case SignClaim::QuarterNonneg: return "quarter-nonneg";
  }
  return "?";
}

} // namespace amv
