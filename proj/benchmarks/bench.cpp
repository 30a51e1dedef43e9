#include <benchmark/benchmark.h>

#include "rumin/generators.hpp"
#include "rumin/literals.hpp"
#include "rumin/theorems.hpp"

using namespace rumin;

namespace {

static void BM_Wedge(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(1);
  GradedAlgebra g = GradedAlgebra::heisenberg(n);
  InvariantForm a = random_invariant_form(rng, g.dim(), 2, 12);
  InvariantForm b = random_invariant_form(rng, g.dim(), 3, 12);
  for (auto _ : state) {
    InvariantForm w = wedge(a, b);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_Wedge)->Arg(2)->Arg(4);

static void BM_IdealIFiber(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  GradedAlgebra g = GradedAlgebra::heisenberg(n);
  int k = n + 1;
  for (auto _ : state) {
    SubspaceBasis basis = ideal_I_fiber(g, k);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_IdealIFiber)->Arg(2)->Arg(3)->Arg(4);

static void BM_IdealJFiber(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  GradedAlgebra g = GradedAlgebra::heisenberg(n);
  int k = n + 1;
  for (auto _ : state) {
    SubspaceBasis basis = ideal_J_fiber(g, k);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_IdealJFiber)->Arg(2)->Arg(3);

static void BM_RuminD(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  const RuminComplex& rc = RuminComplex::get(n);
  Rng rng(2);
  PolyForm alpha = random_rumin_rep(rng, rc, n, 3);
  for (auto _ : state) {
    PolyForm d = rc.rumin_d(n, alpha);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_RuminD)->Arg(1)->Arg(2);

static void BM_BumpIntegral(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(3);
  Box box = Box::cube(2 * n + 1, Rational(0), Rational(1));
  BumpForm w = BumpForm::make(box, random_poly_form(rng, n, 2 * n + 1, 2),
                              BumpSmoothness::c1);
  for (auto _ : state) {
    Rational v = integrate_top(w, box);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_BumpIntegral)->Arg(1)->Arg(2);

static void BM_PansuPullback(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(4);
  ContactMap f = random_contact_map(rng, n, 3);
  PolyForm w = random_poly_form(rng, n, n, 2);
  for (auto _ : state) {
    PolyForm p = pansu_pullback(f, w);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PansuPullback)->Arg(1)->Arg(2);

static void BM_ChainCheck(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  const RuminComplex& rc = RuminComplex::get(n);
  Rng rng(5);
  Box box = Box::cube(2 * n + 1, Rational(0), Rational(1));
  ContactMap f = random_contact_map(rng, n, 2);
  PolyForm alpha = random_rumin_rep(rng, rc, 1, 1);
  BumpForm eta = random_rumin_eta(rng, rc, 2 * n - 1, box, 1);
  for (auto _ : state) {
    Rational r = rumin_chain_check(rc, f, 1, alpha, eta, box);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ChainCheck)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
