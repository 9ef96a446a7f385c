#include "amv/sweep.hpp"

#include <omp.h>

#include "amv/errors.hpp"

namespace amv::sweep {

CellOutcome guarded(const CellCheck& check, std::size_t cell, const std::string& label) {
  try {
    return check(cell);
  } catch (const TheoremViolation& e) {
    CellOutcome out;
    out.failure = Witness{e.query(), e.theorem(), e.value()};
    return out;
  } catch (const std::exception& e) {
    CellOutcome out;
    out.failure = Witness{label + " cell " + std::to_string(cell), "no error", e.what()};
    return out;
  }
}

std::vector<CellOutcome> run_cells_serial(std::size_t count, const CellCheck& check) {
  std::vector<CellOutcome> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(guarded(check, i, "sweep"));
  return out;
}

std::vector<CellOutcome> run_cells_parallel(std::size_t count, const CellCheck& check, int jobs) {
  std::vector<CellOutcome> out(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = guarded(check, static_cast<std::size_t>(i), "sweep");
  return out;
}

std::vector<CellOutcome> run_cells(std::size_t count, const CellCheck& check, const ExecPolicy& policy) {
  if (policy.mode == Mode::Serial || policy.jobs <= 1) return run_cells_serial(count, check);
  return run_cells_parallel(count, check, policy.jobs);
}

} // namespace amv::sweep
