#include "amv/fox.hpp"

#include "amv/bernoulli.hpp"
#include "amv/errors.hpp"

namespace amv {

void FoxQuery::validate() const {
  if (s == 0) throw DomainError("FoxQuery: s must be nonzero");
}

std::string FoxQuery::str() const {
  return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
}

Rational fox_rational(const FoxQuery& q) {
  q.validate();
  const Rational s_pow(pow(Integer(q.s), q.n));
  const Rational value = euler_poly(q.n, Rational(Integer(q.r), Integer(q.s)));
  if (q.s % 2 == 0) return s_pow * value;
  return Rational(1, 2) * s_pow * (value - Rational(sign_power(q.r)) * euler_at_zero(q.n));
}

Integer fox_number(const FoxQuery& q) {
  const Rational v = fox_rational(q);
  if (!v.is_integer()) throw TheoremViolation("Fox integrality", q.str(), v.str());
  return v.to_integer();
}

Rational fox_original(const FoxQuery& q) {
  q.validate();
  const Rational s_pow(pow(Integer(q.s), q.n));
  const Rational value = euler_poly(q.n, Rational(Integer(q.r), Integer(q.s)));
  return s_pow * (value - Rational(sign_power(q.r * q.s)) * euler_at_zero(q.n));
}

EgfSeries fox_series_even(long r, long s, std::size_t order) {
  if (s == 0 || s % 2 != 0) throw DomainError("fox_series_even: s must be even and nonzero");
  // (e^{sx}+1)/2 has integer coefficients s^n/2 (n >= 1) and constant term 1
  const EgfSeries half = scale(Rational(1, 2), add(exp_linear(s, order), constant(1, order)));
  return mul(exp_linear(r, order), reciprocal(half));
}

EgfSeries fox_series_odd(long r, long s, std::size_t order) {
  if (s % 2 == 0) throw DomainError("fox_series_odd: s must be odd");
  const EgfSeries numer = sub(exp_linear(r, order), constant(sign_power(r), order));
  return div(numer, add(exp_linear(s, order), constant(1, order)));
}

} // namespace amv
