#ifndef AMV_AM_NUMBERS_HPP
#define AMV_AM_NUMBERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "amv/egf.hpp"
#include "amv/rational.hpp"

namespace amv {

/// Parameters of M_n(h, k) = k^n (B_n(h/k) - B_n).
struct AmQuery {
  unsigned n;
  long h;
  long k;

  /// Throws DomainError when k == 0.
  void validate() const;
  std::string str() const;
};

/// M_n(h,k) by the finite sum over Bernoulli numbers. Throws TheoremViolation
/// (never rounds) if the sum is not an integer.
Integer m_number(const AmQuery& q);

/// The exact rational sum behind m_number, without the integrality check.
Rational m_rational(const AmQuery& q);

/// kx (e^{hx} - 1) / (e^{kx} - 1) to order N; coefficient n is M_n(h,k).
EgfSeries m_series(long h, long k, std::size_t order);

/// (e^{ax} - 1)/(e^x - 1) as a finite sum of exponentials, no division:
/// 1 + e^x + ... + e^{(a-1)x} for a > 0, and -e^{ax}(1 + ... + e^{(-a-1)x})
/// for a < 0.
EgfSeries exp_geometric_quotient(long a, std::size_t order);

/// Same series as m_series, built from the log expansion
///   kx(e^x-1)/(e^{kx}-1) = sum_j (-1)^{j-1}(j-1)! [(e^x-1)^j/j!] Q_k^{j-1}
/// with Q_k = (e^{kx}-1)/(e^x-1), times Q_h. Uses only products and sums of
/// integer series.
EgfSeries m_log_route(long h, long k, std::size_t order);

/// A_n(k) = M_n(1, k).
Integer a_number(unsigned n, long k);

/// k^n B_n(h/k) = g - sum_p 1/p (+ 1/2 when half_flag).
struct VandiverDecomposition {
  AmQuery query;
  Integer g;
  std::vector<std::uint64_t> primes;
  bool half_flag = false;

  /// g - sum 1/p + half_flag/2.
  Rational reconstruct() const;
};

/// Throws DomainError for n = 0 and TheoremViolation if g is not integral.
VandiverDecomposition vandiver_decompose(const AmQuery& q);

/// A_n(k) for k in [k_min, k_max], n in [n_min, n_max]; rows indexed by k.
struct ATable {
  long k_min, k_max;
  unsigned n_min, n_max;
  std::vector<std::vector<Integer>> rows;
};

ATable a_table(long k_min, long k_max, unsigned n_min, unsigned n_max);

/// Which part of the sign theorem applies to a query.
enum class SignClaim {
  None,
  OddStrict,     // n odd > 1, 0 < h < k/2: (-1)^{ceil(n/2)} M_n > 0
  EvenStrict,    // n even, 0 < h < k:      (-1)^{ceil(n/2)} M_n > 0
  QuarterNonneg, // 4 | n:                  M_n >= 0 for every h
};

struct SignVerdict {
  SignClaim claim;
  bool satisfied; // vacuously true for SignClaim::None
  Integer value;
};

/// Throws DomainError unless k > 0. n = 0 and n = 1 carry no claim.
SignVerdict sign_class(unsigned n, long h, long k);

const char* to_string(SignClaim c);

} // namespace amv

#endif // AMV_AM_NUMBERS_HPP
