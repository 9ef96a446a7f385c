#ifndef AMV_SWEEP_HPP
#define AMV_SWEEP_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace amv::sweep {

/// A failing cell: the query, what the theorem predicts, what was computed.
struct Witness {
  std::string query;
  std::string expected;
  std::string actual;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Result of checking one grid cell.
struct CellOutcome {
  std::optional<Witness> failure;
  std::vector<std::string> log;
  std::size_t checks = 0;

  friend bool operator==(const CellOutcome&, const CellOutcome&) = default;
};

using CellCheck = std::function<CellOutcome(std::size_t)>;

enum class Mode { Serial, Parallel };

struct ExecPolicy {
  Mode mode = Mode::Serial;
  int jobs = 1;
};

/// Reference kernel: checks cells 0..count-1 in order on the calling thread.
std::vector<CellOutcome> run_cells_serial(std::size_t count, const CellCheck& check);

/// OpenMP kernel: cells are distributed dynamically over `jobs` threads; the
/// outcome vector is indexed by cell, so its contents match the serial kernel.
std::vector<CellOutcome> run_cells_parallel(std::size_t count, const CellCheck& check, int jobs);

/// Dispatches on policy. jobs <= 1 always runs the serial kernel.
std::vector<CellOutcome> run_cells(std::size_t count, const CellCheck& check, const ExecPolicy& policy);

/// Wraps a check so that exceptions thrown by the core become witnesses.
CellOutcome guarded(const CellCheck& check, std::size_t cell, const std::string& label);

} // namespace amv::sweep

#endif // AMV_SWEEP_HPP
