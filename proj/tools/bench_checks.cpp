#include <benchmark/benchmark.h>

#include "jsuper/ck.hpp"
#include "jsuper/jadelta.hpp"
#include "jsuper/jvec.hpp"
#include "jsuper/super.hpp"

namespace {

using namespace jsuper;

/*
 * Serial reference engine vs. the OpenMP engine on the heaviest identity
 * checks.  Both paths must produce the same report; the benchmark aborts if
 * either ever returns a counterexample.
 */
template <typename Alg>
void run_identity3(benchmark::State& state, const Alg& alg, ExecPolicy exec) {
  CheckConfig cfg{state.range(0), 4, exec};
  Rng rng(12345);
  for (auto _ : state) {
    CheckReport rep = check_identity_3(alg, cfg, rng);
    benchmark::DoNotOptimize(rep);
    if (rep.status != CheckStatus::Pass) {
      state.SkipWithError("unexpected counterexample");
      return;
    }
  }
  state.SetItemsProcessed(state.iterations() * cfg.trials * 8);
}

void bench_jvec_identity3_serial(benchmark::State& state) {
  run_identity3(state, JVecAlgebra{}, ExecPolicy::Serial);
}

void bench_jvec_identity3_parallel(benchmark::State& state) {
  run_identity3(state, JVecAlgebra{}, ExecPolicy::Parallel);
}

void bench_ck_identity3_serial(benchmark::State& state) {
  run_identity3(state, CKAlgebra{}, ExecPolicy::Serial);
}

void bench_ck_identity3_parallel(benchmark::State& state) {
  run_identity3(state, CKAlgebra{}, ExecPolicy::Parallel);
}

void bench_jadelta_path_agreement(benchmark::State& state, ExecPolicy exec) {
  JADeltaAlgebra direct = JADeltaAlgebra::standard();
  JADeltaAlgebra formula = JADeltaAlgebra::standard(MulPath::Expanded);
  CheckConfig cfg{state.range(0), 4, exec};
  Rng rng(777);
  for (auto _ : state) {
    CheckReport rep = run_trials(
        "path agreement", cfg.trials, rng, cfg.exec, [&](long idx, Rng r) -> std::optional<Witness> {
          long pattern = idx % 4;
          Rng rl = r.split(0), rr = r.split(1);
          auto l = direct.sample((pattern & 1) ? Parity::Odd : Parity::Even, cfg.max_deg, rl);
          auto m = direct.sample((pattern & 2) ? Parity::Odd : Parity::Even, cfg.max_deg, rr);
          auto a = direct.mult(l, m);
          auto b = formula.mult(l, m);
          if (direct.is_zero(direct.sub(a, b))) return std::nullopt;
          return Witness{};
        });
    benchmark::DoNotOptimize(rep);
    if (rep.status != CheckStatus::Pass) {
      state.SkipWithError("product paths disagreed");
      return;
    }
  }
  state.SetItemsProcessed(state.iterations() * cfg.trials);
}

void bench_jadelta_paths_serial(benchmark::State& state) {
  bench_jadelta_path_agreement(state, ExecPolicy::Serial);
}

void bench_jadelta_paths_parallel(benchmark::State& state) {
  bench_jadelta_path_agreement(state, ExecPolicy::Parallel);
}

}  // namespace

BENCHMARK(bench_jvec_identity3_serial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_jvec_identity3_parallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(bench_ck_identity3_serial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_ck_identity3_parallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(bench_jadelta_paths_serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_jadelta_paths_parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
