#include "cli.hpp"

#include <optional>
#include <regex>
#include <utility>

#include <CLI11.hpp>

#include "amv/am_numbers.hpp"
#include "amv/errors.hpp"
#include "amv/fox.hpp"
#include "amv/gy.hpp"
#include "amv/poly_hk.hpp"
#include "amv/render.hpp"
#include "amv/suites.hpp"

namespace amv::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  long lo;
  long hi;
  bool empty() const { return lo > hi; }
};

Range parse_range(const std::string& text, const char* flag) {
  static const std::regex pattern(R"(^(-?\d+)\.\.(-?\d+)$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw UsageError(std::string("malformed range for ") + flag + ": '" + text + "' (expected MIN..MAX)");
  return Range{std::stol(m[1].str()), std::stol(m[2].str())};
}

unsigned as_index(long v, const char* what) {
  if (v < 0) throw UsageError(std::string(what) + " must be nonnegative");
  return static_cast<unsigned>(v);
}

// ---------------------------------------------------------------------------

struct TableArgs {
  std::string k_range, n_range, format = "tsv";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  const Range k = parse_range(a.k_range, "--k");
  const Range n = parse_range(a.n_range, "--n");
  if (k.empty() || n.empty()) throw UsageError("empty or inverted range");
  if (k.lo <= 0 && k.hi >= 0) throw UsageError("--k range must not contain 0");
  const ATable t = a_table(k.lo, k.hi, as_index(n.lo, "--n"), as_index(n.hi, "--n"));
  out << (a.format == "json" ? render_table_json(t) : render_table_tsv(t));
  return kExitOk;
}

struct ValueArgs {
  long n = 0, h = 0, k = 0, j = 0, r = 0, s = 0;
};

int cmd_value(const std::string& kind, const ValueArgs& a, std::ostream& out) {
  const unsigned n = as_index(a.n, "--n");
  if (kind == "m") {
    out << m_number(AmQuery{n, a.h, a.k}).get_str() << '\n';
  } else if (kind == "a") {
    out << a_number(n, a.k).get_str() << '\n';
  } else if (kind == "gy") {
    if (a.j < 1) throw UsageError("--j must be positive");
    out << gy_coefficient(n, GyQuery{static_cast<unsigned>(a.j), a.h, a.k}).str() << '\n';
  } else {
    out << fox_number(FoxQuery{n, a.r, a.s}).get_str() << '\n';
  }
  return kExitOk;
}

struct PolyArgs {
  long n = 0;
  bool shift_ab = false;
};

int cmd_poly(const PolyArgs& a, std::ostream& out) {
  const unsigned n = as_index(a.n, "--n");
  const BivarPoly m = m_polynomial(n);
  if (!a.shift_ab) {
    out << render(m) << '\n';
    return kExitOk;
  }
  // exploratory: (-1)^{n/2} M_n(a, a+b) for even n, printed in a and b
  if (n % 2 != 0) throw UsageError("--shift-ab needs even n");
  const BivarPoly shifted = poly_substitute(m, BivarPoly::h(), BivarPoly::h() + BivarPoly::k());
  out << render(BivarPoly(sign_power(n / 2)) * shifted, "a", "b") << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::optional<long> max_n, max_h, max_k, max_j, order, samples;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<const SuiteInfo*> selected;
  if (a.suite == "all") {
    for (const auto& s : suite_catalog()) selected.push_back(&s);
  } else if (const SuiteInfo* s = find_suite(a.suite)) {
    selected.push_back(s);
  } else {
    throw UsageError("unknown suite '" + a.suite + "'");
  }
  if (a.jobs < 1) throw UsageError("--jobs must be at least 1");

  const sweep::ExecPolicy policy{a.jobs > 1 ? sweep::Mode::Parallel : sweep::Mode::Serial, a.jobs};
  int status = kExitOk;
  for (const SuiteInfo* info : selected) {
    SweepParams p = info->defaults;
    if (a.max_n) p.max_n = as_index(*a.max_n, "--max-n");
    if (a.max_h) p.max_h = as_index(*a.max_h, "--max-h");
    if (a.max_k) p.max_k = as_index(*a.max_k, "--max-k");
    if (a.max_j) p.max_j = as_index(*a.max_j, "--max-j");
    if (a.order) p.order = as_index(*a.order, "--order");
    if (a.samples) p.samples = as_index(*a.samples, "--samples");
    if (a.seed) p.seed = *a.seed;

    err << "verify: " << info->name << " (" << info->description << ")\n";
    const SweepReport report = run_suite(info->name, p, policy);
    out << report.to_json() << '\n';
    if (report.passed) {
      err << "verify: " << info->name << " pass, " << report.cells << " cells, " << report.checks << " checks\n";
    } else {
      err << report.counterexample_json() << '\n';
      status = kExitCounterexample;
    }
  }
  return status;
}

struct SeqArgs {
  std::string family, n_range, format = "bfile";
  std::optional<long> k;
  long s = 2;
};

int cmd_seq(const SeqArgs& a, std::ostream& out) {
  Range n{a.family == "fox0" ? 0L : 1L, 20};
  if (!a.n_range.empty()) n = parse_range(a.n_range, "--n");
  if (a.family == "a" && !a.k) throw UsageError("--family a needs --k");
  if (a.k && *a.k == 0) throw UsageError("--k must be nonzero");
  if (a.s == 0) throw UsageError("--s must be nonzero");
  std::vector<std::pair<long, Integer>> rows;
  for (long i = n.lo; i <= n.hi; ++i) {
    const unsigned idx = as_index(i, "--n");
    if (a.family == "a") rows.emplace_back(i, a_number(idx, *a.k));
    else if (a.family == "genocchi") rows.emplace_back(i, a_number(idx, 2));
    else rows.emplace_back(i, fox_number(FoxQuery{idx, 0, a.s}));
  }
  out << render_bfile(rows);
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Almkvist-Meurman, Bernoulli/Euler and Hurwitz-series toolkit", "amverify"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "A_n(k) table");
  table_cmd->add_option("--k", table.k_range, "k range MIN..MAX")->required();
  table_cmd->add_option("--n", table.n_range, "n range MIN..MAX")->required();
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"tsv", "json"}));

  ValueArgs value;
  std::string value_kind;
  auto* value_cmd = app.add_subcommand("value", "single exact value");
  value_cmd->require_subcommand(1);
  auto* value_m = value_cmd->add_subcommand("m", "M_n(h,k)");
  value_m->add_option("--n", value.n)->required();
  value_m->add_option("--h", value.h)->required();
  value_m->add_option("--k", value.k)->required();
  auto* value_a = value_cmd->add_subcommand("a", "A_n(k)");
  value_a->add_option("--n", value.n)->required();
  value_a->add_option("--k", value.k)->required();
  auto* value_gy = value_cmd->add_subcommand("gy", "generalized Gy coefficient");
  value_gy->add_option("--n", value.n)->required();
  value_gy->add_option("--j", value.j)->required();
  value_gy->add_option("--h", value.h)->required();
  value_gy->add_option("--k", value.k)->required();
  auto* value_fox = value_cmd->add_subcommand("fox", "Fox number");
  value_fox->add_option("--n", value.n)->required();
  value_fox->add_option("--r", value.r)->required();
  value_fox->add_option("--s", value.s)->required();

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand("poly", "M_n as a polynomial in h, k");
  poly_cmd->add_option("--n", poly.n)->required();
  poly_cmd->add_flag("--shift-ab", poly.shift_ab, "print (-1)^{n/2} M_n(a, a+b) instead (even n)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
  verify_cmd->add_option("--suite", verify.suite, "suite name or 'all'")->required();
  verify_cmd->add_option("--max-n", verify.max_n);
  verify_cmd->add_option("--max-h", verify.max_h, "bound on |h| (|r| for fox)");
  verify_cmd->add_option("--max-k", verify.max_k, "bound on |k| (|s| for fox)");
  verify_cmd->add_option("--max-j", verify.max_j);
  verify_cmd->add_option("--order", verify.order);
  verify_cmd->add_option("--samples", verify.samples);
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads (default 1)");

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "integer sequence as an OEIS b-file");
  seq_cmd->add_option("--family", seq.family)->required()->check(CLI::IsMember({"a", "genocchi", "fox0"}));
  seq_cmd->add_option("--k", seq.k);
  seq_cmd->add_option("--s", seq.s);
  seq_cmd->add_option("--n", seq.n_range, "n range MIN..MAX");
  seq_cmd->add_option("--format", seq.format)->check(CLI::IsMember({"bfile"}));

  std::vector<std::string> argv_store{"amverify"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table_cmd) return cmd_table(table, out);
    if (*value_cmd) {
      for (auto* sub : {value_m, value_a, value_gy, value_fox})
        if (*sub) value_kind = sub->get_name();
      return cmd_value(value_kind, value, out);
    }
    if (*poly_cmd) return cmd_poly(poly, out);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*seq_cmd) return cmd_seq(seq, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TheoremViolation& e) {
    err << "{\"theorem\":\"" << e.theorem() << "\",\"query\":\"" << e.query() << "\",\"value\":\"" << e.value()
        << "\"}\n";
    return kExitCounterexample;
  } catch (const std::out_of_range& e) {
    err << "error: number out of range\n";
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace amv::cli
