#include "amv/gy.hpp"

#include <json.hpp>

#include "amv/arith.hpp"
#include "amv/bernoulli.hpp"
#include "amv/errors.hpp"

namespace amv {

void GyQuery::validate() const {
  if (j < 1) throw DomainError("GyQuery: j must be positive");
  if (k == 0) throw DomainError("GyQuery: k must be nonzero");
}

std::string GyQuery::str() const {
  return "j=" + std::to_string(j) + " h=" + std::to_string(h) + " k=" + std::to_string(k);
}

Rational gy_term(unsigned n, unsigned i, const GyQuery& q) {
  if (n < q.j || i > n - q.j) return Rational(0);
  const Rational b = bernoulli(i);
  if (b.is_zero()) return b;
  const Integer scale =
      binomial(n, i) * pow(Integer(q.h), n - i) * stirling2(n - i, q.j) * pow(Integer(q.k), i);
  return Rational(scale) * b;
}

Rational gy_coefficient(unsigned n, const GyQuery& q) {
  q.validate();
  Rational acc(0);
  if (n < q.j) return acc;
  for (unsigned i = 0; i <= n - q.j; ++i) acc += gy_term(n, i, q);
  return acc;
}

EgfSeries gy_series(const GyQuery& q, std::size_t order) {
  q.validate();
  const std::size_t work = order + 1;
  const EgfSeries power = divided_power(sub(exp_linear(q.h, order), constant(1, order)), q.j);
  const EgfSeries bern_k = div(x_power(1, work), sub(exp_linear(q.k, work), constant(1, work)));
  return mul(power, scale(Rational(q.k), bern_k));
}

bool gam_condition(const GyQuery& q) {
  for (auto p : prime_factors(static_cast<long>(q.j)))
    if (!divides(p, q.h) && !divides(p, q.k)) return false;
  return true;
}

std::string NecessityWitness::to_json() const {
  nlohmann::ordered_json j;
  j["j"] = query.j;
  j["h"] = query.h;
  j["k"] = query.k;
  j["p"] = p;
  j["n_star"] = n_star;
  j["coefficient"] = coefficient.num().get_str() + "/" + coefficient.den().get_str();
  j["valuation"] = valuation;
  return j.dump();
}

NecessityWitness nec_witness(unsigned j, long h, long k, std::uint64_t p) {
  const GyQuery q{j, h, k};
  q.validate();
  if (!is_prime(p)) throw DomainError("nec_witness: " + std::to_string(p) + " is not prime");
  if (j % p != 0) throw DomainError("nec_witness: p does not divide j");
  if (divides(p, h) || divides(p, k)) throw DomainError("nec_witness: p divides h or k");

  NecessityWitness w{q, p, static_cast<unsigned>(j + p - 1), 0, 0, 0};
  w.coefficient = gy_coefficient(w.n_star, q);
  w.lucas_residue = lucas_binomial_mod(w.n_star, j, p);
  const std::string where = q.str() + " p=" + std::to_string(p) + " n=" + std::to_string(w.n_star);
  if (w.coefficient.is_zero() || is_p_integral(w.coefficient, p))
    throw TheoremViolation("Gy necessity", where, w.coefficient.str());
  w.valuation = p_adic_valuation(w.coefficient, p);
  if (w.lucas_residue == 0) throw TheoremViolation("Lucas congruence", where, "C(j+p-1, j) = 0 mod p");
  return w;
}

} // namespace amv
