#include <benchmark/benchmark.h>

#include "apnkit/defect.hpp"
#include "apnkit/diffcore.hpp"
#include "apnkit/flats.hpp"
#include "apnkit/functions.hpp"

namespace {

apnkit::FuncTable modinv(unsigned n) {
  const auto f = apnkit::make_field(n);
  return apnkit::modified_inverse(f, {{0, f->generator()}});
}

void BM_RowProfiles(benchmark::State& state) {
  const auto g = modinv(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apnkit::row_profiles(g));
}
BENCHMARK(BM_RowProfiles)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_Ddt(benchmark::State& state) {
  const auto g = modinv(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apnkit::ddt(g));
}
BENCHMARK(BM_Ddt)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_DValue(benchmark::State& state) {
  const auto g = modinv(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apnkit::d_value(g));
}
BENCHMARK(BM_DValue)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_DValueJobs(benchmark::State& state) {
  const auto g = modinv(12);
  for (auto _ : state) benchmark::DoNotOptimize(apnkit::d_value(g, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_DValueJobs)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_VanishingFlats(benchmark::State& state) {
  const auto g = modinv(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apnkit::vanishing_flats(g));
}
BENCHMARK(BM_VanishingFlats)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
