#ifndef AMV_SUITES_HPP
#define AMV_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amv/sweep.hpp"

namespace amv {

enum class TheoremId {
  AM_INTEGRALITY,
  AM_ROUTES,
  VANDIVER,
  VON_STAUDT_CLAUSEN,
  PROP1,
  PROP2,
  THM2_SIGNS,
  GY_T3,
  GY_T4,
  FOX,
  HURWITZ_CLOSURE,
};

const char* to_string(TheoremId id);

/// Grid bounds. Suites interpret max_h / max_k as the bounds of their own
/// first and second integer parameter (r and s for the Fox suite).
struct SweepParams {
  unsigned max_n = 0;
  long max_h = 0;
  long max_k = 0;
  unsigned max_j = 0;
  unsigned order = 0;
  unsigned samples = 0;
  std::uint64_t seed = 20240601;
};

struct SweepReport {
  TheoremId theorem_id;
  std::string suite;
  std::string grid;
  bool passed = true;
  std::optional<sweep::Witness> witness; // present iff !passed
  std::size_t cells = 0;
  std::size_t checks = 0;
  std::vector<std::string> log;

  /// Report object for standard output (no timing, so it is deterministic).
  std::string to_json() const;
  /// Counterexample object for standard error. Requires !passed.
  std::string counterexample_json() const;
};

struct SuiteInfo {
  std::string name;
  TheoremId id;
  SweepParams defaults;
  std::string description;
};

const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo* find_suite(const std::string& name);

/// Runs one suite. Throws DomainError for an unknown name.
SweepReport run_suite(const std::string& name, const SweepParams& params, const sweep::ExecPolicy& policy);

/// Ordered reduction: the first failing cell by index becomes the witness.
SweepReport reduce(TheoremId id, std::string suite, std::string grid, std::vector<sweep::CellOutcome> outcomes);

} // namespace amv

#endif // AMV_SUITES_HPP
