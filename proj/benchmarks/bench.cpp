#include <benchmark/benchmark.h>

#include "monodromy/braid.hpp"
#include "monodromy/canonical.hpp"
#include "monodromy/certify.hpp"
#include "monodromy/coset.hpp"
#include "monodromy/hurwitz.hpp"
#include "monodromy/orbit.hpp"

using namespace monodromy;

namespace {

void BM_orbit_q4(benchmark::State& state) {
  Factorization f = builtin("q:4");
  for (auto _ : state) {
    OrbitGraph g = enumerate(f);
    benchmark::DoNotOptimize(g.keys.data());
  }
}
BENCHMARK(BM_orbit_q4);

// infinite orbit cut off by the vertex budget; arg = worker threads
void BM_orbit_frontier(benchmark::State& state) {
  Factorization f = builtin("q:5");
  OrbitBudget budget;
  budget.max_vertices = 10'000;
  budget.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    OrbitGraph g = enumerate(f, budget);
    benchmark::DoNotOptimize(g.keys.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 10'000);
}
BENCHMARK(BM_orbit_frontier)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_sphere_key(benchmark::State& state) {
  Factorization f = builtin("E:3");
  for (auto _ : state) {
    CanonicalKey k = sphere_key(f);
    benchmark::DoNotOptimize(k.bytes.data());
  }
}
BENCHMARK(BM_sphere_key);

void BM_todd_coxeter_b4(benchmark::State& state) {
  Presentation p = braid_presentation(4);
  std::vector<std::vector<int>> sub{{1, 1, 1}, {2, 1, -2}, {3, 2, -3}};
  for (auto _ : state) {
    CosetTable t = todd_coxeter(p, sub);
    benchmark::DoNotOptimize(t.rows.data());
  }
}
BENCHMARK(BM_todd_coxeter_b4);

void BM_braid_equal(benchmark::State& state) {
  BraidWord cube = BraidWord(3, {1, 1, 1});
  BraidWord half = halftwist_word(1, 3, 3);
  BraidWord lhs = power(concat(half, cube), 3);
  BraidWord rhs = power(concat(cube, half), 3);
  for (auto _ : state) {
    bool eq = braid_equal(lhs, rhs);
    benchmark::DoNotOptimize(eq);
  }
}
BENCHMARK(BM_braid_equal);

void BM_certify_alternating(benchmark::State& state) {
  Factorization f = builtin("E:2");
  for (auto _ : state) {
    auto cert = certify_infinite(f, 50);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_certify_alternating)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
