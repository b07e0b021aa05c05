// Serial reference loops against the OpenMP kernels.

#include "qctw/embedding.hpp"
#include "qctw/flat_twistor.hpp"
#include "qctw/parallel.hpp"
#include "qctw/sampling.hpp"

#include <benchmark/benchmark.h>

using namespace qctw;

namespace {

void model_samples(benchmark::State& state, Execution exec) {
  const int n = static_cast<int>(state.range(0));
  const ModelConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(sample_model(n, 16, 7, cfg, exec));
  state.SetItemsProcessed(state.iterations() * 16);
}

void homomorphism_trials(benchmark::State& state, bool parallel) {
  const int n = static_cast<int>(state.range(0));
  auto trial = [n](std::size_t t) -> std::optional<std::string> {
    Sampler s(derive_seed(7, "bench", t));
    const QMatrix a = s.g_element(n), b = s.g_element(n);
    if (phi(commutator(a, b)) != commutator(phi(a), phi(b))) return "mismatch";
    return std::nullopt;
  };
  for (auto _ : state) benchmark::DoNotOptimize(first_failure(64, trial, parallel));
  state.SetItemsProcessed(state.iterations() * 64);
}

}  // namespace

BENCHMARK_CAPTURE(model_samples, serial, Execution::serial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(model_samples, parallel, Execution::parallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(homomorphism_trials, serial, false)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(homomorphism_trials, parallel, true)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
