#ifndef AMV_FOX_HPP
#define AMV_FOX_HPP

#include <string>

#include "amv/egf.hpp"
#include "amv/rational.hpp"

namespace amv {

/// Parameters of s^n E_n(r/s).
struct FoxQuery {
  unsigned n;
  long r;
  long s;

  void validate() const;
  std::string str() const;
};

/// Even s: s^n E_n(r/s). Odd s: (1/2) s^n (E_n(r/s) - (-1)^r E_n(0)).
/// The branch follows the parity of s, negative s included.
Rational fox_rational(const FoxQuery& q);

/// fox_rational asserted integral; TheoremViolation otherwise.
Integer fox_number(const FoxQuery& q);

/// s^n (E_n(r/s) - (-1)^{rs} E_n(0)), the unhalved form.
Rational fox_original(const FoxQuery& q);

/// 2e^{rx} / (e^{sx}+1) = e^{rx} * 1/((e^{sx}+1)/2). Throws DomainError for odd s.
EgfSeries fox_series_even(long r, long s, std::size_t order);

/// (e^{rx} - (-1)^r) / (e^{sx}+1). Throws DomainError for even s.
EgfSeries fox_series_odd(long r, long s, std::size_t order);

} // namespace amv

#endif // AMV_FOX_HPP
