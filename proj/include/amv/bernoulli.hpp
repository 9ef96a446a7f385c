#ifndef AMV_BERNOULLI_HPP
#define AMV_BERNOULLI_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "amv/rational.hpp"

namespace amv {

/// B_0..B_N from sum_{i<=n} C(n+1,i) B_i = 0. Served from a shared memo
/// table; the snapshot is immutable.
std::shared_ptr<const std::vector<Rational>> bernoulli_numbers(unsigned N);

/// B_n (memoized).
Rational bernoulli(unsigned n);

/// B_n(u) = sum_i C(n,i) B_i u^{n-i}, evaluated by Horner's rule.
Rational bernoulli_poly(unsigned n, const Rational& u);

/// B_n(u) - B_n.
Rational bernoulli_tilde(unsigned n, const Rational& u);

/// E_n(0) = 2(1 - 2^{n+1}) B_{n+1} / (n+1).
Rational euler_at_zero(unsigned n);

/// Coefficients c_0..c_n of E_n(u) = sum_m c_m u^m (memoized per degree).
std::shared_ptr<const std::vector<Rational>> euler_poly_coeffs(unsigned n);

/// E_n(u), the coefficient of x^n/n! in 2e^{ux}/(e^x+1).
Rational euler_poly(unsigned n, const Rational& u);

/// Stirling number of the second kind S(n, j).
Integer stirling2(unsigned n, unsigned j);

/// B_n = integer_part - sum_{p in primes} 1/p with primes = {p : p-1 | n}.
struct VscDecomposition {
  unsigned n;
  Integer integer_part;
  std::vector<std::uint64_t> primes;
};

/// Throws DomainError unless n is even and >= 2; TheoremViolation if the
/// integer part comes out fractional.
VscDecomposition von_staudt_clausen(unsigned n);

} // namespace amv

#endif // AMV_BERNOULLI_HPP
