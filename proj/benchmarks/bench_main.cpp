#include <benchmark/benchmark.h>

#include <random>

#include "tvcat/completion.hpp"
#include "tvcat/distributor.hpp"

using namespace tvcat;

namespace {

TheoryRef posets() { return builtin_theory("identity", builtin_quantale("bool2")); }

CategoryRef chain(const TheoryRef& th, std::size_t n) {
  const auto& q = th->quantale_ref();
  VMatrix a(q, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = i <= j ? q->top() : q->bottom();
  return check_category(th, FinSet::range(n), std::move(a)).value();
}

CategoryRef antichain(const TheoryRef& th, std::size_t n) { return discrete(th, FinSet::range(n)); }

void BM_PresheafCat(benchmark::State& state) {
  auto x = antichain(posets(), state.range(0));
  const PhiClass all = builtin_class("all");
  for (auto _ : state) benchmark::DoNotOptimize(presheaf_cat(x, all).size());
}
BENCHMARK(BM_PresheafCat)->DenseRange(1, 6);

void BM_CocompleteCheck(benchmark::State& state) {
  auto th = posets();
  auto x = chain(th, state.range(0));
  const PhiClass all = builtin_class("all");
  const InjectivityTests tests = injectivity_tests(th, all, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cocomplete_check(x, all, {}, &tests).cocomplete);
}
BENCHMARK(BM_CocompleteCheck)->DenseRange(1, 4);

void BM_KleisliUltrafilter(benchmark::State& state) {
  auto th = builtin_theory("ultrafilter_principal", builtin_quantale("bool2"));
  const std::size_t n = state.range(0);
  auto x = discrete(th, FinSet::range(n));
  const Distributor one = unit_distributor(x);
  for (auto _ : state) benchmark::DoNotOptimize(kleisli_compose(one, one).matrix);
}
BENCHMARK(BM_KleisliUltrafilter)->RangeMultiplier(2)->Range(2, 16);

void BM_LawvereCompose(benchmark::State& state) {
  const auto q = builtin_quantale("lawvere");
  const std::size_t n = state.range(0);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> w(0, 48);
  VMatrix a(q, n, n), b(q, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = Value::rational(w(rng), 12);
      b(i, j) = Value::rational(w(rng), 12);
    }
  for (auto _ : state) benchmark::DoNotOptimize(compose(b, a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LawvereCompose)->RangeMultiplier(2)->Range(4, 64)->Complexity(benchmark::oNCubed);

}  // namespace
BENCHMARK_MAIN();
