#include <benchmark/benchmark.h>

#include <vector>

#include "fusionkit/fusion.hpp"
#include "fusionkit/group.hpp"
#include "fusionkit/kernels.hpp"

using namespace fusionkit;

namespace {

const FiniteGroup& s5() {
  static const auto g = build_group("S5");
  return *g;
}

std::vector<std::uint16_t> s5_table() {
  const auto& g = s5();
  std::vector<std::uint16_t> t(static_cast<std::size_t>(g.order()) * g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) t[static_cast<std::size_t>(a) * g.order() + b] = static_cast<std::uint16_t>(g.multiply(a, b));
  return t;
}

std::vector<std::int64_t> dense(const FusionAlgebra& f) {
  const int n = f.rank();
  std::vector<std::int64_t> t(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t[(static_cast<std::size_t>(i) * n + j) * n + k] = f.coefficient(i, j, k);
  return t;
}

template <bool Parallel>
void cayley(benchmark::State& state) {
  const auto t = s5_table();
  for (auto _ : state) {
    auto r = Parallel ? kernels::parallel::cayley_associativity_violation(t, 120)
                      : kernels::serial::cayley_associativity_violation(t, 120);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void class_matrix(benchmark::State& state) {
  const auto& g = s5();
  std::vector<double> w(static_cast<std::size_t>(g.num_classes()), 1.0);
  for (auto _ : state) {
    auto m = Parallel ? kernels::parallel::class_matrix(g, w) : kernels::serial::class_matrix(g, w);
    benchmark::DoNotOptimize(m);
  }
}

template <bool Parallel>
void tensor(benchmark::State& state) {
  const auto t = dense(group_algebra(*build_group("S4")));
  for (auto _ : state) {
    auto r = Parallel ? kernels::parallel::tensor_associativity_violation(t, 24)
                      : kernels::serial::tensor_associativity_violation(t, 24);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void violation(benchmark::State& state) {
  const std::size_t n = 1 << 20;
  auto holds = [](std::size_t i) { return (i * 2654435761u) % 1000003u != 7u || i < n - 10; };
  for (auto _ : state) {
    auto r = Parallel ? kernels::parallel::first_violation(n, holds) : kernels::serial::first_violation(n, holds);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(cayley<false>)->Name("cayley_associativity/serial");
BENCHMARK(cayley<true>)->Name("cayley_associativity/parallel");
BENCHMARK(class_matrix<false>)->Name("class_matrix/serial");
BENCHMARK(class_matrix<true>)->Name("class_matrix/parallel");
BENCHMARK(tensor<false>)->Name("tensor_associativity/serial");
BENCHMARK(tensor<true>)->Name("tensor_associativity/parallel");
BENCHMARK(violation<false>)->Name("first_violation/serial");
BENCHMARK(violation<true>)->Name("first_violation/parallel");

BENCHMARK_MAIN();
