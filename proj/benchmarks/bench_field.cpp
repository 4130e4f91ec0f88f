#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "apnkit/field.hpp"

namespace {

std::vector<apnkit::Element> operands(const apnkit::Field& f, std::size_t count) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<apnkit::Element> pick(0, static_cast<apnkit::Element>(f.size() - 1));
  std::vector<apnkit::Element> v(count);
  for (auto& x : v) x = pick(rng);
  return v;
}

void BM_MulTable(benchmark::State& state) {
  const auto f = apnkit::make_field(static_cast<unsigned>(state.range(0)));
  const auto xs = operands(*f, 4096);
  for (auto _ : state) {
    apnkit::Element acc = 1;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) acc ^= f->mul(xs[i], xs[i + 1]);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 4095);
}
BENCHMARK(BM_MulTable)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_MulPoly(benchmark::State& state) {
  const auto f = apnkit::make_field(static_cast<unsigned>(state.range(0)));
  const auto xs = operands(*f, 4096);
  for (auto _ : state) {
    apnkit::Element acc = 1;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) acc ^= f->mul_poly(xs[i], xs[i + 1]);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 4095);
}
BENCHMARK(BM_MulPoly)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_MakeField(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(apnkit::make_field(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_MakeField)->Arg(8)->Arg(16);

}  // namespace
