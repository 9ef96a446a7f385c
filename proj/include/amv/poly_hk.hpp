#ifndef AMV_POLY_HK_HPP
#define AMV_POLY_HK_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "amv/rational.hpp"

namespace amv {

/// Exponents (deg_h, deg_k) of a monomial h^a k^b.
struct Monomial {
  unsigned h;
  unsigned k;

  unsigned degree() const { return h + k; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse bivariate polynomial in h, k over the rationals. No zero
/// coefficients are ever stored.
class BivarPoly {
public:
  using Terms = std::map<Monomial, Rational>;

  BivarPoly() = default;
  BivarPoly(const Rational& c) { add_term({0, 0}, c); } // NOLINT: constants convert

  static BivarPoly h() { return monomial({1, 0}, 1); }
  static BivarPoly k() { return monomial({0, 1}, 1); }
  static BivarPoly monomial(Monomial m, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(Monomial m) const;

  /// Leading monomial in lex order with h > k. Requires nonzero.
  std::pair<Monomial, Rational> leading() const;

  void add_term(Monomial m, const Rational& c);

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator-(const BivarPoly& a) { return BivarPoly() - a; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

private:
  Terms terms_;
};

BivarPoly poly_pow(const BivarPoly& p, unsigned e);

Rational poly_eval(const BivarPoly& p, const Rational& h, const Rational& k);

/// p(h_sub, k_sub): substitutes a polynomial for each symbol.
BivarPoly poly_substitute(const BivarPoly& p, const BivarPoly& h_sub, const BivarPoly& k_sub);

/// M_n(h,k) = sum_{i<n} C(n,i) B_i h^{n-i} k^i as a polynomial.
BivarPoly m_polynomial(unsigned n);

bool is_homogeneous(const BivarPoly& p, unsigned degree);

struct DivisionResult {
  BivarPoly quotient;
  BivarPoly remainder;
};

/// Multivariate division by a single polynomial in lex order h > k. With one
/// divisor the remainder is zero exactly when the divisor divides p.
/// Throws DomainError for a zero divisor.
DivisionResult poly_divide(const BivarPoly& p, const BivarPoly& divisor);

/// Quotient witness when factor | p, nullopt otherwise.
std::optional<BivarPoly> divides(const BivarPoly& factor, const BivarPoly& p);

/// hk | M_n - h^n, and M_n(h, 0) = h^n. Throws DomainError for n = 0.
bool m_minus_hn_divisible(unsigned n);

/// Degree-lexicographic rendering, e.g. "h^5 - 5/2 h^4 k + 5/3 h^3 k^2 - 1/6 h k^4".
std::string render(const BivarPoly& p, const std::string& h_name = "h", const std::string& k_name = "k");

} // namespace amv

#endif // AMV_POLY_HK_HPP
