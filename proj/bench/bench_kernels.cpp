// Serial reference vs OpenMP kernels on a match-sized block:
// 22 players + ball, 90 minutes at 25 fps.

#include <benchmark/benchmark.h>

#include <random>

#include "tracklight/kernels.hpp"

using namespace tracklight;

namespace {

constexpr std::size_t kFrames = 90 * 60 * 25;
constexpr std::size_t kPlayers = 23;

const std::vector<double>& coords() {
  static const std::vector<double> c = [] {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> step(0.0, 0.2);
    std::vector<double> v(kFrames * kPlayers * 2);
    for (std::size_t k = 0; k < kPlayers * 2; ++k) {
      double x = 20.0;
      for (std::size_t t = 0; t < kFrames; ++t) {
        x += step(rng);
        v[t * kPlayers * 2 + k] = x;
      }
    }
    return v;
  }();
  return c;
}

template <auto Kernel>
void filter(benchmark::State& state) {
  const auto sos = butterworth_lowpass_sections(3, 1.0, 25.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Kernel(coords(), kFrames, kPlayers * 2, sos, 12));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * coords().size()));
}

template <auto Speed, auto Rate, auto Power>
void metabolic(benchmark::State& state) {
  for (auto _ : state) {
    const auto v = Speed(coords(), kFrames, kPlayers, 25.0);
    const auto a = Rate(v, kFrames, kPlayers, 25.0);
    benchmark::DoNotOptimize(Power(v, a, 1.0, 9.81));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kFrames * kPlayers));
}

template <auto Kernel>
void apen(benchmark::State& state) {
  std::vector<std::vector<double>> series;
  for (std::size_t k = 0; k < kPlayers; ++k) {
    std::vector<double> s(static_cast<std::size_t>(state.range(0)));
    for (std::size_t t = 0; t < s.size(); ++t) s[t] = coords()[t * kPlayers * 2 + 2 * k];
    series.push_back(std::move(s));
  }
  const std::vector<double> tol(kPlayers, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(series, 2, tol));
}

}  // namespace

BENCHMARK(filter<kernels::serial::filter_columns>)->Name("filter/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(filter<kernels::omp::filter_columns>)->Name("filter/omp")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(metabolic<kernels::serial::speed, kernels::serial::rate_of_change, kernels::serial::metabolic_power>)
    ->Name("metabolic/serial")
    ->Unit(benchmark::kMillisecond);
BENCHMARK(metabolic<kernels::omp::speed, kernels::omp::rate_of_change, kernels::omp::metabolic_power>)
    ->Name("metabolic/omp")
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(apen<kernels::serial::approximate_entropy>)->Name("apen/serial")->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(apen<kernels::omp::approximate_entropy>)
    ->Name("apen/omp")
    ->Arg(500)
    ->Arg(2000)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
