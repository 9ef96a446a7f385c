#ifndef AMV_ARITH_HPP
#define AMV_ARITH_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "amv/rational.hpp"

namespace amv {

/// C(n, i); zero when i < 0 or i > n.
Integer binomial(unsigned n, long i);

/// Rows 0..n of Pascal's triangle, shared and grown on demand. The returned
/// snapshot is immutable and safe to read from any thread.
std::shared_ptr<const std::vector<std::vector<Integer>>> pascal_rows(unsigned n);

/// All primes p <= limit, increasing (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_upto(std::uint64_t limit);

bool is_prime(std::uint64_t p);

/// Distinct prime divisors of |m|, increasing. Empty for m in {-1, 0, 1}.
std::vector<std::uint64_t> prime_factors(long m);

/// C(n, i) mod p via the base-p digits of n and i. Throws DomainError when p
/// is not prime.
std::uint64_t lucas_binomial_mod(std::uint64_t n, std::uint64_t i, std::uint64_t p);

/// Exponent of p in q. Throws DomainError for q = 0 or non-prime p.
long p_adic_valuation(const Rational& q, std::uint64_t p);

/// True iff p does not divide the denominator of q.
bool is_p_integral(const Rational& q, std::uint64_t p);

/// true iff p | m (p > 0). Works for negative m and m = 0.
inline bool divides(std::uint64_t p, long m) {
  return m % static_cast<long>(p) == 0;
}

} // namespace amv

#endif // AMV_ARITH_HPP
