#include "amv/poly_hk.hpp"

#include <algorithm>
#include <vector>

#include "amv/arith.hpp"
#include "amv/bernoulli.hpp"
#include "amv/errors.hpp"

namespace amv {

BivarPoly BivarPoly::monomial(Monomial m, const Rational& c) {
  BivarPoly p;
  p.add_term(m, c);
  return p;
}

Rational BivarPoly::coeff(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Monomial, Rational> BivarPoly::leading() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  const auto& [m, c] = *terms_.rbegin();
  return {m, c};
}

void BivarPoly::add_term(Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term({ma.h + mb.h, ma.k + mb.k}, ca * cb);
  return r;
}

BivarPoly poly_pow(const BivarPoly& p, unsigned e) {
  BivarPoly r(1);
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

Rational poly_eval(const BivarPoly& p, const Rational& h, const Rational& k) {
  Rational acc(0);
  for (const auto& [m, c] : p.terms()) acc += c * pow(h, m.h) * pow(k, m.k);
  return acc;
}

BivarPoly poly_substitute(const BivarPoly& p, const BivarPoly& h_sub, const BivarPoly& k_sub) {
  BivarPoly r;
  for (const auto& [m, c] : p.terms()) r += BivarPoly(c) * poly_pow(h_sub, m.h) * poly_pow(k_sub, m.k);
  return r;
}

BivarPoly m_polynomial(unsigned n) {
  BivarPoly p;
  const auto b = bernoulli_numbers(n);
  for (unsigned i = 0; i < n; ++i) p.add_term({n - i, i}, Rational(binomial(n, i)) * (*b)[i]);
  return p;
}

bool is_homogeneous(const BivarPoly& p, unsigned degree) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [degree](const auto& t) { return t.first.degree() == degree; });
}

DivisionResult poly_divide(const BivarPoly& p, const BivarPoly& divisor) {
  if (divisor.is_zero()) throw DomainError("poly_divide: zero divisor");
  const auto [lead_m, lead_c] = divisor.leading();
  DivisionResult out;
  BivarPoly work = p;
  while (!work.is_zero()) {
    const auto [m, c] = work.leading();
    if (m.h >= lead_m.h && m.k >= lead_m.k) {
      const BivarPoly t = BivarPoly::monomial({m.h - lead_m.h, m.k - lead_m.k}, c / lead_c);
      out.quotient += t;
      work -= t * divisor;
    } else {
      out.remainder.add_term(m, c);
      work -= BivarPoly::monomial(m, c);
    }
  }
  return out;
}

std::optional<BivarPoly> divides(const BivarPoly& factor, const BivarPoly& p) {
  auto [q, rem] = poly_divide(p, factor);
  if (!rem.is_zero()) return std::nullopt;
  if (q * factor != p) throw TheoremViolation("exact division", "poly_divide", "quotient does not reproduce dividend");
  return q;
}

bool m_minus_hn_divisible(unsigned n) {
  if (n == 0) throw DomainError("m_minus_hn_divisible: n must be positive");
  const BivarPoly m = m_polynomial(n);
  const BivarPoly hn = BivarPoly::monomial({n, 0}, 1);
  const bool divisible = divides(BivarPoly::h() * BivarPoly::k(), m - hn).has_value();
  const bool at_k_zero = poly_substitute(m, BivarPoly::h(), BivarPoly()) == hn;
  return divisible && at_k_zero;
}

namespace {
std::string monomial_text(Monomial m, const std::string& h_name, const std::string& k_name) {
  std::string out;
  auto factor = [&out](const std::string& name, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  factor(h_name, m.h);
  factor(k_name, m.k);
  return out;
}
} // namespace

std::string render(const BivarPoly& p, const std::string& h_name, const std::string& k_name) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first.h > b.first.h;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomial_text(m, h_name, k_name);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.str() + " " + mono;
    }
    first = false;
  }
  return out;
}

} // namespace amv
