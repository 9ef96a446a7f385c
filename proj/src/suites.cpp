#include "amv/suites.hpp"

#include <random>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "amv/am_numbers.hpp"
#include "amv/arith.hpp"
#include "amv/bernoulli.hpp"
#include "amv/egf.hpp"
#include "amv/errors.hpp"
#include "amv/fox.hpp"
#include "amv/gy.hpp"
#include "amv/poly_hk.hpp"

namespace amv {

using sweep::CellOutcome;
using sweep::ExecPolicy;
using sweep::Witness;

const char* to_string(TheoremId id) {
  switch (id) {
  case TheoremId::AM_INTEGRALITY: return "AM_INTEGRALITY";
  case TheoremId::AM_ROUTES: return "AM_ROUTES";
  case TheoremId::VANDIVER: return "VANDIVER";
  case TheoremId::VON_STAUDT_CLAUSEN: return "VON_STAUDT_CLAUSEN";
  case TheoremId::PROP1: return "PROP1";
  case TheoremId::PROP2: return "PROP2";
  case TheoremId::THM2_SIGNS: return "THM2_SIGNS";
  case TheoremId::GY_T3: return "GY_T3";
  case TheoremId::GY_T4: return "GY_T4";
  case TheoremId::FOX: return "FOX";
  case TheoremId::HURWITZ_CLOSURE: return "HURWITZ_CLOSURE";
  }
  return "?";
}

std::string SweepReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["theorem"] = amv::to_string(theorem_id);
  j["grid"] = grid;
  j["outcome"] = passed ? "pass" : "counterexample";
  j["cells"] = cells;
  j["checks"] = checks;
  if (witness) j["witness"] = {{"query", witness->query}, {"expected", witness->expected}, {"actual", witness->actual}};
  if (!log.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& line : log) arr.push_back(nlohmann::ordered_json::parse(line));
    j["witnesses"] = std::move(arr);
  }
  return j.dump();
}

std::string SweepReport::counterexample_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["theorem"] = amv::to_string(theorem_id);
  j["query"] = witness ? witness->query : "";
  j["expected"] = witness ? witness->expected : "";
  j["actual"] = witness ? witness->actual : "";
  return j.dump();
}

SweepReport reduce(TheoremId id, std::string suite, std::string grid, std::vector<CellOutcome> outcomes) {
  SweepReport r{id, std::move(suite), std::move(grid), true, std::nullopt, outcomes.size(), 0, {}};
  for (auto& o : outcomes) {
    r.checks += o.checks;
    for (auto& line : o.log) r.log.push_back(std::move(line));
    if (o.failure && r.passed) {
      r.passed = false;
      r.witness = std::move(o.failure);
    }
  }
  return r;
}

namespace {

CellOutcome failed(CellOutcome out, std::string query, std::string expected, std::string actual) {
  out.failure = Witness{std::move(query), std::move(expected), std::move(actual)};
  return out;
}

std::vector<long> symmetric_range(long bound, bool skip_zero) {
  std::vector<long> v;
  for (long x = -bound; x <= bound; ++x)
    if (!(skip_zero && x == 0)) v.push_back(x);
  return v;
}

std::string str(const Integer& z) { return z.get_str(); }

// ---------------------------------------------------------------------------

SweepReport am_integrality(const SweepParams& p, const ExecPolicy& pol) {
  bernoulli_numbers(p.max_n + 1);
  std::vector<std::pair<long, long>> cells;
  for (long h : symmetric_range(p.max_h, false))
    for (long k : symmetric_range(p.max_k, true)) cells.emplace_back(h, k);

  auto check = [&](std::size_t c) {
    CellOutcome out;
    const auto [h, k] = cells[c];
    for (unsigned n = 0; n <= p.max_n; ++n) {
      const AmQuery q{n, h, k};
      const Rational r = m_rational(q);
      ++out.checks;
      if (!r.is_integer()) return failed(std::move(out), q.str(), "integer", r.str());
    }
    return out;
  };
  std::ostringstream grid;
  grid << "n<=" << p.max_n << " |h|<=" << p.max_h << " 1<=|k|<=" << p.max_k;
  return reduce(TheoremId::AM_INTEGRALITY, "am-integrality", grid.str(), sweep::run_cells(cells.size(), check, pol));
}

SweepReport am_routes(const SweepParams& p, const ExecPolicy& pol) {
  bernoulli_numbers(p.max_n + 1);
  pascal_rows(p.max_n + 2);
  std::vector<std::pair<long, long>> cells;
  for (long h : symmetric_range(p.max_h, false))
    for (long k : symmetric_range(p.max_k, true)) cells.emplace_back(h, k);

  auto check = [&](std::size_t c) {
    CellOutcome out;
    const auto [h, k] = cells[c];
    const EgfSeries by_division = m_series(h, k, p.max_n);
    const EgfSeries by_log = m_log_route(h, k, p.max_n);
    for (unsigned n = 0; n <= p.max_n; ++n) {
      const AmQuery q{n, h, k};
      const Rational by_sum = m_rational(q);
      ++out.checks;
      if (by_sum != by_division[n] || by_sum != by_log[n])
        return failed(std::move(out), q.str(), "sum=" + by_sum.str(),
                      "division=" + by_division[n].str() + " log=" + by_log[n].str());
    }
    return out;
  };
  std::ostringstream grid;
  grid << "n<=" << p.max_n << " |h|<=" << p.max_h << " 1<=|k|<=" << p.max_k;
  return reduce(TheoremId::AM_ROUTES, "am-routes", grid.str(), sweep::run_cells(cells.size(), check, pol));
}

SweepReport vandiver(const SweepParams& p, const ExecPolicy& pol) {
  bernoulli_numbers(p.max_n + 1);
  std::vector<std::pair<unsigned, long>> cells;
  for (unsigned n = 1; n <= p.max_n; ++n)
    for (long k : symmetric_range(p.max_k, true)) cells.emplace_back(n, k);

  auto check = [&](std::size_t c) {
    CellOutcome out;
    const auto [n, k] = cells[c];
    const Rational k_pow(pow(Integer(k), n));
    const Rational frac_at_zero = frac(k_pow * bernoulli(n));
    for (long h = -p.max_h; h <= p.max_h; ++h) {
      const AmQuery q{n, h, k};
      const VandiverDecomposition d = vandiver_decompose(q);
      const Rational direct = k_pow * bernoulli_poly(n, Rational(Integer(h), Integer(k)));
      ++out.checks;
      if (d.reconstruct() != direct) return failed(std::move(out), q.str(), direct.str(), d.reconstruct().str());
      if (n % 2 == 1 && !d.primes.empty())
        return failed(std::move(out), q.str(), "no primes for odd n", std::to_string(d.primes.size()));
      if (d.half_flag != (n == 1 && k % 2 != 0))
        return failed(std::move(out), q.str(), "half_flag iff n=1 and k odd", d.half_flag ? "set" : "clear");
      if (frac(direct) != frac_at_zero)
        return failed(std::move(out), q.str(), "frac=" + frac_at_zero.str(), "frac=" + frac(direct).str());
    }
    return out;
  };
  std::ostringstream grid;
  grid << "1<=n<=" << p.max_n << " |h|<=" << p.max_h << " 1<=|k|<=" << p.max_k;
  return reduce(TheoremId::VANDIVER, "vandiver", grid.str(), sweep::run_cells(cells.size(), check, pol));
}

SweepReport von_staudt(const SweepParams& p, const ExecPolicy& pol) {
  bernoulli_numbers(p.max_n + 1);
  std::vector<unsigned> cells;
  for (unsigned n = 2; n <= p.max_n; n += 2) cells.push_back(n);

  auto check = [&](std::size_t c) {
    CellOutcome out;
    const unsigned n = cells[c];
    const std::string query = "n=" + std::to_string(n);
    const VscDecomposition d = von_staudt_clausen(n);
    const Rational b = bernoulli(n);
    Integer product(1);
    Rational rebuilt(d.integer_part);
    for (auto prime : d.primes) {
      product *= Integer(prime);
      rebuilt -= Rational(1, Integer(prime));
    }
    ++out.checks;
    if (rebuilt != b) return failed(std::move(out), query, b.str(), rebuilt.str());
    ++out.checks;
    if (product != b.den()) return failed(std::move(out), query, "den(B_n)=" + str(b.den()), "prod=" + str(product));
    for (auto prime : primes_upto(2 * n + 2)) {
      if (n % (prime - 1) == 0) continue;
      ++out.checks;
      if (!is_p_integral(b, prime))
        return failed(std::move(out), query + " p=" + std::to_string(prime), "p-integral", b.str());
    }
    const VandiverDecomposition v = vandiver_decompose(AmQuery{n, 0, 1});
    ++out.checks;
    if (v.g != d.integer_part || v.primes != d.primes)
      return failed(std::move(out), query, "Vandiver(h=0,k=1) = von Staudt-Clausen", "g=" + str(v.g));
    return out;
  };
  std::ostringstream grid;
  grid << "even 2<=n<=" << p.max_n;
  return reduce(TheoremId::VON_STAUDT_CLAUSEN, "von-staudt", grid.str(), sweep::run_cells(cells.size(), check, pol));
}

SweepReport prop1(const SweepParams& p, const ExecPolicy& pol) {
  bernoulli_numbers(p.max_n + 1);
  const BivarPoly h = BivarPoly::h();
  const BivarPoly k = BivarPoly::k();

  auto check = [&](std::size_t c) {
    CellOutcome out;
    const unsigned n = static_cast<unsigned>(c);
    const std::string query = "n=" + std::to_string(n);
    const BivarPoly m = m_polynomial(n);
    const int sign_n = sign_power(n);

    ++out.checks;
    if (!is_homogeneous(m, n)) return failed(std::move(out), query, "homogeneous of degree n", render(m));
    if (n != 1) {
      ++out.checks;
      const BivarPoly reflected = poly_substitute(m, k - h, k);
      if (reflected != BivarPoly(sign_n) * m)
        return failed(std::move(out), query, "M_n(k-h,k) = (-1)^n M_n", render(reflected));
    }
    const BivarPoly shift_gap = poly_substitute(m, h + k, k) - m;
    const BivarPoly expected_gap = n == 0 ? BivarPoly() : BivarPoly::monomial({n - 1, 1}, static_cast<long>(n));
    ++out.checks;
    if (shift_gap != expected_gap)
      return failed(std::move(out), query, "M_n(h+k,k) - M_n(h,k) = n k h^(n-1)", render(shift_gap));

    for (long hv = -p.max_h; hv <= p.max_h; ++hv) {
      for (long kv = -p.max_k; kv <= p.max_k; ++kv) {
        if (kv == 0) continue;
        const AmQuery q{n, hv, kv};
        const Integer base = m_number(q);
        if (n != 1) {
          ++out.checks;
          const Integer refl = m_number(AmQuery{n, kv - hv, kv});
          if (refl != sign_n * base) return failed(std::move(out), q.str(), "reflection " + str(sign_n * base), str(refl));
        }
        const Integer shifted = m_number(AmQuery{n, hv + kv, kv});
        const Integer gap = n == 0 ? Integer(0) : Integer(Integer(n) * kv * pow(Integer(hv), n - 1));
        ++out.checks;
        if (shifted != base + gap) return failed(std::move(out), q.str(), "shift " + str(base + gap), str(shifted));
        if (std::abs(hv) <= 6 && kv >= 1 && kv <= 6) {
          ++out.checks;
          const Rational ev = poly_eval(m, Rational(hv), Rational(kv));
          if (ev != Rational(base)) return failed(std::move(out), q.str(), "poly_eval = m_number " + str(base), ev.str());
        }
      }
    }
    if (n >= 1) {
      for (long hv = 1; hv <= p.max_h; ++hv) {
        Integer power_sum(0);
        for (long t = 0; t < hv; ++t) power_sum += pow(Integer(t), n - 1);
        const Integer expected = Integer(n) * power_sum;
        const Integer got = m_number(AmQuery{n, hv, 1});
        ++out.checks;
        if (got != expected)
          return failed(std::move(out), AmQuery{n, hv, 1}.str(), "n*sum t^(n-1) = " + str(expected), str(got));
      }
    }
    return out;
  };
  std::ostringstream grid;
  grid << "n<=" << p.max_n << " symbolic; numeric |h|<=" << p.max_h << " 1<=|k|<=" << p.max_k;
  return reduce(TheoremId::PROP1, "prop1", grid.str(), sweep::run_cells(p.max_n + 1, check, pol));
}

SweepReport prop2(const SweepParams& p, const ExecPolicy& pol) {
  bernoulli_numbers(p.max_n + 1);
  const BivarPoly h = BivarPoly::h();
  const BivarPoly k = BivarPoly::k();
  const BivarPoly zero;

  auto check = [&](std::size_t c) {
    CellOutcome out;
    const unsigned n = static_cast<unsigned>(c);
    const std::string query = "n=" + std::to_string(n);
    const BivarPoly m = m_polynomial(n);
    auto require = [&](bool ok, const char* what) {
      ++out.checks;
      if (!ok) out.failure = Witness{query, what, render(m)};
      return ok;
    };

    if (!require(divides(h, m).has_value(), "(a) h | M_n")) return out;
    if (!require(poly_substitute(m, zero, k).is_zero(), "(a) M_n(0,k) = 0")) return out;
    if (n >= 1 && !require(m_minus_hn_divisible(n), "(b) hk | M_n - h^n and M_n(h,0) = h^n")) return out;
    if (n > 1) {
      if (!require(divides(k - h, m).has_value(), "(c) (k-h) | M_n")) return out;
      if (!require(poly_substitute(m, h, h).is_zero(), "(c) M_n(h,h) = 0")) return out;
    }
    if (n > 1 && n % 2 == 1) {
      if (!require(divides(k - BivarPoly(2) * h, m).has_value(), "(d) (k-2h) | M_n")) return out;
      if (!require(poly_substitute(m, h, BivarPoly(2) * h).is_zero(), "(d) M_n(h,2h) = 0")) return out;
    }
    if (n > 2 && n % 2 == 0) {
      const auto step1 = divides(poly_pow(h, 2), m);
      const auto step2 = step1 ? divides(poly_pow(k - h, 2), *step1) : std::nullopt;
      if (!require(step2.has_value(), "(e) h^2 (k-h)^2 | M_n, two-step")) return out;
      const auto direct = divides(poly_pow(h, 2) * poly_pow(k - h, 2), m);
      if (!require(direct.has_value() && *direct == *step2, "(e) h^2 (k-h)^2 | M_n, direct")) return out;
    }
    return out;
  };
  std::ostringstream grid;
  grid << "n<=" << p.max_n << " symbolic";
  return reduce(TheoremId::PROP2, "prop2", grid.str(), sweep::run_cells(p.max_n + 1, check, pol));
}

SweepReport thm2_signs(const SweepParams& p, const ExecPolicy& pol) {
  bernoulli_numbers(p.max_n + 1);
  std::vector<std::pair<unsigned, long>> cells;
  for (unsigned n = 0; n <= p.max_n; ++n)
    for (long k = 1; k <= p.max_k; ++k) cells.emplace_back(n, k);

  auto check = [&](std::size_t c) {
    CellOutcome out;
    const auto [n, k] = cells[c];
    for (long h = -p.max_h; h <= p.max_h; ++h) {
      const SignVerdict v = sign_class(n, h, k);
      ++out.checks;
      if (!v.satisfied)
        return failed(std::move(out), AmQuery{n, h, k}.str(), to_string(v.claim), str(v.value));
    }
    // Table corollary (h = 1). For k = 2 and odd n the hypothesis 0 < h < k/2
    // fails and A_n(2) vanishes instead.
    if (n >= 2 && k >= 2) {
      const Integer a = a_number(n, k);
      const AmQuery q{n, 1, k};
      ++out.checks;
      if (k == 2 && n % 2 == 1) {
        if (a != 0) return failed(std::move(out), q.str(), "A_n(2) = 0 for odd n > 1", str(a));
      } else if (sign_power((n + 1) / 2) * sgn(a) <= 0) {
        return failed(std::move(out), q.str(), "(-1)^ceil(n/2) A_n(k) > 0", str(a));
      }
    }
    return out;
  };
  std::ostringstream grid;
  grid << "n<=" << p.max_n << " |h|<=" << p.max_h << " 1<=k<=" << p.max_k;
  return reduce(TheoremId::THM2_SIGNS, "thm2-signs", grid.str(), sweep::run_cells(cells.size(), check, pol));
}

std::vector<GyQuery> gy_grid(const SweepParams& p) {
  std::vector<GyQuery> cells;
  for (unsigned j = 1; j <= p.max_j; ++j)
    for (long h = -p.max_h; h <= p.max_h; ++h)
      for (long k = 1; k <= p.max_k; ++k) cells.push_back(GyQuery{j, h, k});
  return cells;
}

SweepReport gy_sufficiency(const SweepParams& p, const ExecPolicy& pol) {
  bernoulli_numbers(p.order + 2);
  pascal_rows(p.order + 2);
  std::vector<GyQuery> cells;
  for (const auto& q : gy_grid(p))
    if (gam_condition(q)) cells.push_back(q);

  const unsigned route_order = std::min(p.order, 25u);
  auto check = [&](std::size_t c) {
    CellOutcome out;
    const GyQuery& q = cells[c];
    const EgfSeries s = gy_series(q, p.order);
    ++out.checks;
    if (const auto bad = is_hurwitz(s))
      return failed(std::move(out), q.str() + " n=" + std::to_string(bad->index), "integer", bad->value.str());
    for (unsigned n = 0; n <= route_order; ++n) {
      const Rational by_sum = gy_coefficient(n, q);
      ++out.checks;
      if (by_sum != s[n])
        return failed(std::move(out), q.str() + " n=" + std::to_string(n), "series=" + s[n].str(), "sum=" + by_sum.str());
    }
    return out;
  };
  std::ostringstream grid;
  grid << "j<=" << p.max_j << " |h|<=" << p.max_h << " 1<=k<=" << p.max_k << " order=" << p.order
       << " (prime condition holds)";
  return reduce(TheoremId::GY_T3, "gy-sufficiency", grid.str(), sweep::run_cells(cells.size(), check, pol));
}

SweepReport gy_necessity(const SweepParams& p, const ExecPolicy& pol) {
  bernoulli_numbers(2 * p.max_j + 2);
  std::vector<std::pair<GyQuery, std::uint64_t>> cells;
  for (const auto& q : gy_grid(p))
    for (auto prime : prime_factors(static_cast<long>(q.j)))
      if (!divides(prime, q.h) && !divides(prime, q.k)) cells.emplace_back(q, prime);

  auto check = [&](std::size_t c) {
    CellOutcome out;
    const auto& [q, prime] = cells[c];
    const NecessityWitness w = nec_witness(q.j, q.h, q.k, prime);
    const std::string where = q.str() + " p=" + std::to_string(prime) + " n=" + std::to_string(w.n_star);
    ++out.checks;
    if (w.valuation >= 0) return failed(std::move(out), where, "negative valuation", std::to_string(w.valuation));
    for (unsigned i = 0; i + 1 < prime; ++i) {
      const Rational t = gy_term(w.n_star, i, q);
      ++out.checks;
      if (!is_p_integral(t, prime)) return failed(std::move(out), where + " i=" + std::to_string(i), "p-integral term", t.str());
    }
    const Rational top = gy_term(w.n_star, static_cast<unsigned>(prime - 1), q);
    ++out.checks;
    if (top.is_zero() || p_adic_valuation(top, prime) != w.valuation)
      return failed(std::move(out), where, "i=p-1 term carries valuation " + std::to_string(w.valuation), top.str());
    const EgfSeries s = gy_series(q, w.n_star);
    ++out.checks;
    if (s[w.n_star] != w.coefficient)
      return failed(std::move(out), where, "series=" + s[w.n_star].str(), "sum=" + w.coefficient.str());
    out.log.push_back(w.to_json());
    return out;
  };
  std::ostringstream grid;
  grid << "j<=" << p.max_j << " |h|<=" << p.max_h << " 1<=k<=" << p.max_k << " (p | j, p does not divide h, k)";
  return reduce(TheoremId::GY_T4, "gy-necessity", grid.str(), sweep::run_cells(cells.size(), check, pol));
}

SweepReport fox(const SweepParams& p, const ExecPolicy& pol) {
  bernoulli_numbers(p.max_n + 2);
  euler_poly_coeffs(p.max_n);
  pascal_rows(p.max_n + 1);
  std::vector<std::pair<long, long>> cells;
  for (long r : symmetric_range(p.max_h, false))
    for (long s : symmetric_range(p.max_k, true)) cells.emplace_back(r, s);

  auto check = [&](std::size_t c) {
    CellOutcome out;
    const auto [r, s] = cells[c];
    const EgfSeries series = s % 2 == 0 ? fox_series_even(r, s, p.max_n) : fox_series_odd(r, s, p.max_n);
    for (unsigned n = 0; n <= p.max_n; ++n) {
      const FoxQuery q{n, r, s};
      const Rational v = fox_rational(q);
      ++out.checks;
      if (!v.is_integer()) return failed(std::move(out), q.str(), "integer", v.str());
      ++out.checks;
      if (v != series[n]) return failed(std::move(out), q.str(), "series=" + series[n].str(), v.str());
      const Rational original = fox_original(q);
      ++out.checks;
      if (!original.is_integer()) return failed(std::move(out), q.str(), "Fox original form integral", original.str());
      const Rational mirrored = fox_rational(FoxQuery{n, -r, -s});
      ++out.checks;
      if (mirrored != Rational(sign_power(n)) * v)
        return failed(std::move(out), q.str(), "(-r,-s) gives (-1)^n times value", mirrored.str());
    }
    return out;
  };
  std::ostringstream grid;
  grid << "n<=" << p.max_n << " |r|<=" << p.max_h << " 1<=|s|<=" << p.max_k;
  return reduce(TheoremId::FOX, "fox", grid.str(), sweep::run_cells(cells.size(), check, pol));
}

EgfSeries random_integer_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_int_distribution<long> dist(-99, 99);
  EgfSeries f(order);
  for (std::size_t n = 0; n <= order; ++n) f[n] = Rational(dist(rng));
  return f;
}

SweepReport hurwitz_closure(const SweepParams& p, const ExecPolicy& pol) {
  pascal_rows(p.order + 1);
  auto check = [&](std::size_t c) {
    CellOutcome out;
    std::seed_seq seq{p.seed, static_cast<std::uint64_t>(c)};
    std::mt19937_64 rng(seq);
    const EgfSeries f = random_integer_series(rng, p.order);
    const EgfSeries g = random_integer_series(rng, p.order);
    const std::string query = "seed=" + std::to_string(p.seed) + " sample=" + std::to_string(c);

    auto require_hurwitz = [&](const EgfSeries& s, const std::string& what) {
      ++out.checks;
      if (const auto bad = is_hurwitz(s)) {
        out.failure = Witness{query + " " + what + " n=" + std::to_string(bad->index), "integer", bad->value.str()};
        return false;
      }
      return true;
    };

    if (!require_hurwitz(add(f, g), "add")) return out;
    if (!require_hurwitz(sub(f, g), "sub")) return out;
    if (!require_hurwitz(mul(f, g), "mul")) return out;

    EgfSeries f0 = f;
    f0[0] = 0;
    for (unsigned j = 1; j <= 6; ++j)
      if (!require_hurwitz(divided_power(f0, j), "divided_power j=" + std::to_string(j))) return out;

    EgfSeries unit = g;
    unit[0] = 1;
    const EgfSeries inv = reciprocal(unit);
    if (!require_hurwitz(inv, "reciprocal")) return out;
    ++out.checks;
    if (mul(unit, inv) != constant(1, p.order)) out.failure = Witness{query, "f * (1/f) = 1", "mismatch"};
    return out;
  };
  std::ostringstream grid;
  grid << p.samples << " random series, order " << p.order << ", seed " << p.seed;
  return reduce(TheoremId::HURWITZ_CLOSURE, "hurwitz-closure", grid.str(), sweep::run_cells(p.samples, check, pol));
}

SweepParams defaults(unsigned max_n, long max_h, long max_k, unsigned max_j = 0, unsigned order = 0,
                     unsigned samples = 0) {
  SweepParams p;
  p.max_n = max_n;
  p.max_h = max_h;
  p.max_k = max_k;
  p.max_j = max_j;
  p.order = order;
  p.samples = samples;
  return p;
}

} // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog = {
      {"am-integrality", TheoremId::AM_INTEGRALITY, defaults(40, 12, 12), "M_n(h,k) is an integer"},
      {"am-routes", TheoremId::AM_ROUTES, defaults(30, 10, 10), "sum, division and log-expansion routes agree"},
      {"vandiver", TheoremId::VANDIVER, defaults(30, 10, 10), "Vandiver decomposition of k^n B_n(h/k)"},
      {"von-staudt", TheoremId::VON_STAUDT_CLAUSEN, defaults(60, 0, 0), "von Staudt-Clausen and square-free denominators"},
      {"prop1", TheoremId::PROP1, defaults(20, 12, 12), "homogeneity, reflection, shift, power sums"},
      {"prop2", TheoremId::PROP2, defaults(20, 0, 0), "divisibility of M_n as a polynomial"},
      {"thm2-signs", TheoremId::THM2_SIGNS, defaults(40, 24, 12), "sign pattern of M_n(h,k) and A_n(k)"},
      {"gy-sufficiency", TheoremId::GY_T3, defaults(0, 8, 8, 8, 30), "prime condition implies a Hurwitz series"},
      {"gy-necessity", TheoremId::GY_T4, defaults(0, 8, 8, 8), "coefficient j+p-1 is not p-integral"},
      {"fox", TheoremId::FOX, defaults(30, 10, 9), "Fox integrality for Euler polynomials"},
      {"hurwitz-closure", TheoremId::HURWITZ_CLOSURE, defaults(0, 0, 0, 0, 20, 200), "Hurwitz series closure"},
  };
  return catalog;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suite_catalog())
    if (s.name == name) return &s;
  return nullptr;
}

SweepReport run_suite(const std::string& name, const SweepParams& params, const ExecPolicy& policy) {
  const SuiteInfo* info = find_suite(name);
  if (!info) throw DomainError("unknown suite '" + name + "'");
  switch (info->id) {
  case TheoremId::AM_INTEGRALITY: return am_integrality(params, policy);
  case TheoremId::AM_ROUTES: return am_routes(params, policy);
  case TheoremId::VANDIVER: return vandiver(params, policy);
  case TheoremId::VON_STAUDT_CLAUSEN: return von_staudt(params, policy);
  case TheoremId::PROP1: return prop1(params, policy);
  case TheoremId::PROP2: return prop2(params, policy);
  case TheoremId::THM2_SIGNS: return thm2_signs(params, policy);
  case TheoremId::GY_T3: return gy_sufficiency(params, policy);
  case TheoremId::GY_T4: return gy_necessity(params, policy);
  case TheoremId::FOX: return fox(params, policy);
  case TheoremId::HURWITZ_CLOSURE: return hurwitz_closure(params, policy);
  }
  throw DomainError("unhandled suite '" + name + "'");
}

} // namespace amv
