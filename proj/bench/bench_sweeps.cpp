// Serial reference kernel vs. the OpenMP kernel on representative sweeps.
//   ./build/bench/amverify_bench --benchmark_filter=routes

#include <thread>

#include <benchmark/benchmark.h>

#include "amv/suites.hpp"

namespace {

amv::SweepParams params_for(const std::string& suite, long scale) {
  amv::SweepParams p = amv::find_suite(suite)->defaults;
  if (suite == "am-routes") {
    p.max_h = scale;
    p.max_k = scale;
  } else if (suite == "gy-sufficiency") {
    p.max_h = scale;
  } else if (suite == "hurwitz-closure") {
    p.samples = static_cast<unsigned>(scale) * 10;
  }
  return p;
}

void run(benchmark::State& state, const std::string& suite, amv::sweep::Mode mode) {
  const int jobs = mode == amv::sweep::Mode::Serial ? 1 : static_cast<int>(std::max(2u, std::thread::hardware_concurrency()));
  const auto p = params_for(suite, state.range(0));
  for (auto _ : state) {
    auto report = amv::run_suite(suite, p, {mode, jobs});
    benchmark::DoNotOptimize(report.checks);
  }
  state.counters["jobs"] = jobs;
}

void BM_RoutesSerial(benchmark::State& s) { run(s, "am-routes", amv::sweep::Mode::Serial); }
void BM_RoutesParallel(benchmark::State& s) { run(s, "am-routes", amv::sweep::Mode::Parallel); }
void BM_GySerial(benchmark::State& s) { run(s, "gy-sufficiency", amv::sweep::Mode::Serial); }
void BM_GyParallel(benchmark::State& s) { run(s, "gy-sufficiency", amv::sweep::Mode::Parallel); }
void BM_ClosureSerial(benchmark::State& s) { run(s, "hurwitz-closure", amv::sweep::Mode::Serial); }
void BM_ClosureParallel(benchmark::State& s) { run(s, "hurwitz-closure", amv::sweep::Mode::Parallel); }

} // namespace

BENCHMARK(BM_RoutesSerial)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RoutesParallel)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GySerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GyParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureSerial)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureParallel)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
