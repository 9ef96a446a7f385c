#ifndef AMV_RATIONAL_HPP
#define AMV_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace amv {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long v) : q_(v) {}
  Rational(int v) : q_(static_cast<long>(v)) {}
  Rational(const Integer& v) : q_(v) {}
  // unevaluated integer expressions such as a * b
  template <class Op>
  Rational(const __gmp_expr<mpz_t, Op>& e) : q_(Integer(e)) {} // NOLINT
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "a" or "a/b".
  static Rational parse(const std::string& text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  /// Numerator when the value is integral; throws std::domain_error otherwise.
  Integer to_integer() const;

  /// "num" for integers, "num/den" otherwise.
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class q_{0};
};

Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);

/// Largest integer <= q.
Integer floor(const Rational& q);

/// q - floor(q), always in [0, 1).
Rational frac(const Rational& q);

/// (-1)^e for any integer e.
inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace amv

#endif // AMV_RATIONAL_HPP
