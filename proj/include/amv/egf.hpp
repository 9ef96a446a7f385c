#ifndef AMV_EGF_HPP
#define AMV_EGF_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "amv/rational.hpp"

namespace amv {

/// Truncated exponential generating function f(x) = sum_{n<=N} r_n x^n/n!.
///
/// Coefficients are stored n!-scaled: coeff(n) is r_n, not r_n/n!. A Hurwitz
/// series is therefore one whose stored coefficients are all integers.
class EgfSeries {
public:
  /// Zero series of the given order.
  explicit EgfSeries(std::size_t order) : coeffs_(order + 1) {}
  explicit EgfSeries(std::vector<Rational> coeffs);
  EgfSeries(std::initializer_list<Rational> coeffs) : EgfSeries(std::vector<Rational>(coeffs)) {}

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
  Rational& operator[](std::size_t n) { return coeffs_[n]; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient, or nullopt for the zero series.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  /// Same series cut to a smaller order.
  EgfSeries truncate(std::size_t order) const;

  friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

private:
  std::vector<Rational> coeffs_;
};

/// e^{ax}: r_n = a^n.
EgfSeries exp_linear(const Rational& a, std::size_t order);
/// The constant c.
EgfSeries constant(const Rational& c, std::size_t order);
/// x^m / m! scaled by nothing, i.e. x^m: r_m = m!.
EgfSeries x_power(std::size_t m, std::size_t order);

EgfSeries add(const EgfSeries& f, const EgfSeries& g);
EgfSeries sub(const EgfSeries& f, const EgfSeries& g);
EgfSeries scale(const Rational& c, const EgfSeries& f);

/// Binomial convolution: (fg)_n = sum_i C(n,i) f_i g_{n-i}.
EgfSeries mul(const EgfSeries& f, const EgfSeries& g);

/// Divides out x^m: r_n -> r_{n+m} n!/(n+m)!. Requires r_0..r_{m-1} = 0.
EgfSeries shift_down(const EgfSeries& f, std::size_t m);

/// q with q*g = f. Leading powers of x common to g are cancelled first; the
/// result has order min(order f, order g) - val(g). Throws DomainError when g
/// is zero or val(g) > val(f).
EgfSeries div(const EgfSeries& f, const EgfSeries& g);

/// 1/f. Throws DomainError when f_0 = 0.
EgfSeries reciprocal(const EgfSeries& f);

/// f^j / j!. Throws DomainError when f_0 != 0.
EgfSeries divided_power(const EgfSeries& f, unsigned j);

/// log(1 + f) = sum_{j>=1} (-1)^{j-1} f^j / j, exact at the truncation order
/// because f^j has valuation >= j. Throws DomainError when f_0 != 0.
EgfSeries log1p(const EgfSeries& f);

/// First non-integral coefficient of a series.
struct NonIntegral {
  std::size_t index;
  Rational value;
};

/// Hurwitz certificate: empty when every coefficient is an integer.
std::optional<NonIntegral> is_hurwitz(const EgfSeries& f);

} // namespace amv

#endif // AMV_EGF_HPP
