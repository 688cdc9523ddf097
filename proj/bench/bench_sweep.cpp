#include <benchmark/benchmark.h>

#include "twrc/protocols.hpp"
#include "twrc/region.hpp"

using namespace twrc;

namespace {

const ChannelGains kGains =
    validate_gains(db_to_linear(10), db_to_linear(15), db_to_linear(3));

template <bool Parallel>
void sweep(benchmark::State& state, Protocol p) {
  const auto eval = evaluator_for(p, achievable::DfOptions{.alpha_grid = 9});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = Parallel ? region::sweep_region(eval, kGains, n) : region::sweep_region_serial(eval, kGains, n);
    benchmark::DoNotOptimize(r);
  }
}

void serial(benchmark::State& s, Protocol p) { sweep<false>(s, p); }
void parallel(benchmark::State& s, Protocol p) { sweep<true>(s, p); }

}  // namespace

BENCHMARK_CAPTURE(serial, outer_serial, Protocol::outer)->Arg(181)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(parallel, outer_parallel, Protocol::outer)->Arg(181)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(serial, hbc_serial, Protocol::hbc)->Arg(181)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(parallel, hbc_parallel, Protocol::hbc)->Arg(181)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(serial, df_serial, Protocol::six_state_df)->Arg(31)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(parallel, df_parallel, Protocol::six_state_df)->Arg(31)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
