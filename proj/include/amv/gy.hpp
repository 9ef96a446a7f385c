#ifndef AMV_GY_HPP
#define AMV_GY_HPP

#include <cstdint>
#include <string>

#include "amv/egf.hpp"
#include "amv/rational.hpp"

namespace amv {

/// Parameters of the series ((e^{hx}-1)^j / j!) * kx/(e^{kx}-1).
struct GyQuery {
  unsigned j;
  long h;
  long k;

  /// Throws DomainError unless j >= 1 and k != 0.
  void validate() const;
  std::string str() const;
};

/// sum_{i=0}^{n-j} C(n,i) h^{n-i} S(n-i,j) k^i B_i; zero when n < j.
Rational gy_coefficient(unsigned n, const GyQuery& q);

/// The i-th summand of gy_coefficient.
Rational gy_term(unsigned n, unsigned i, const GyQuery& q);

/// The series itself, through divided powers and one series division.
EgfSeries gy_series(const GyQuery& q, std::size_t order);

/// Every prime divisor of j divides h or k.
bool gam_condition(const GyQuery& q);

/// Certificate that the coefficient at n* = j + p - 1 is not p-integral.
struct NecessityWitness {
  GyQuery query;
  std::uint64_t p;
  unsigned n_star;
  Rational coefficient;
  long valuation;
  std::uint64_t lucas_residue; // C(j+p-1, j) mod p, nonzero

  /// {"j":..,"h":..,"k":..,"p":..,"n_star":..,"coefficient":"num/den","valuation":..}
  std::string to_json() const;
};

/// Throws DomainError unless p is a prime dividing j and neither h nor k;
/// throws TheoremViolation if the coefficient turns out p-integral.
NecessityWitness nec_witness(unsigned j, long h, long k, std::uint64_t p);

} // namespace amv

#endif // AMV_GY_HPP
