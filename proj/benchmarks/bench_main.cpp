#include <benchmark/benchmark.h>

#include "itergroup/bp_encode.hpp"
#include "itergroup/cycle_transform.hpp"
#include "itergroup/leakage_lab.hpp"
#include "itergroup/product_map.hpp"
#include "itergroup/reductions.hpp"
#include "itergroup/text_format.hpp"

using namespace itergroup;

namespace {

Permutation nonidentity_even(std::size_t t, Rng& rng) {
  for (;;) {
    auto p = random_even(t, rng);
    if (!p.is_identity()) return p;
  }
}

void BM_Compose(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const auto a = random_permutation(t, rng);
  const auto b = random_permutation(t, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Compose)->Arg(8)->Arg(64)->Arg(1024);

void BM_Convert(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const auto a = nonidentity_even(t, rng);
  std::vector<Point> cyc;
  for (Point p = 1; p < t; ++p) cyc.push_back(p);
  const auto beta = Permutation::from_cycles(t, {cyc});
  for (auto _ : state) benchmark::DoNotOptimize(convert(a, beta));
}
BENCHMARK(BM_Convert)->Arg(10)->Arg(30)->Arg(102);

void BM_MapApply(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const auto alpha = nonidentity_even(t, rng);
  const auto beta = nonidentity_even(t, rng);
  const auto f = build_alpha_to_beta(alpha, beta, t);
  const auto x = sample_class(alpha, t, rng);
  for (auto _ : state) benchmark::DoNotOptimize(f.apply(x));
  state.counters["output_len"] = static_cast<double>(f.output_length());
}
BENCHMARK(BM_MapApply)->Arg(6)->Arg(10)->Arg(18);

void BM_Encode(benchmark::State& state) {
  Rng rng(4);
  const auto b = random_program(rng, static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(encode(b, "10110010"));
}
BENCHMARK(BM_Encode)->Arg(30)->Arg(300);

void BM_ReduceIdentityBudget(benchmark::State& state) {
  Rng rng(5);
  const auto x = sample_class(Permutation(8), 8, rng);
  const auto decide = exact_fold_decider();
  const ReductionOptions opts{CandidateMode::Derived, static_cast<std::size_t>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(reduce_id_to_single(x, decide, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ReduceIdentityBudget)->Arg(1024);

void BM_SampleClass(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  Rng rng(6);
  const auto alpha = nonidentity_even(t, rng);
  for (auto _ : state) benchmark::DoNotOptimize(sample_class(alpha, t, rng));
}
BENCHMARK(BM_SampleClass)->Arg(6)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
