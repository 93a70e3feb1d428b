#include "fusionkit/kernels.hpp"

#include <algorithm>
#include <atomic>

#include <omp.h>

#include "fusionkit/group.hpp"

namespace fusionkit::kernels {

namespace {

inline std::size_t at(int n, int a, int b) {
  return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
}

bool associative_at(std::span<const std::uint16_t> t, int n, int a, int b, int c) {
  const int left = t[at(n, t[at(n, a, b)], c)];
  const int right = t[at(n, a, t[at(n, b, c)])];
  return left == right;
}

std::size_t tensor_at(int b, int i, int j, int k) {
  return (static_cast<std::size_t>(i) * static_cast<std::size_t>(b) + static_cast<std::size_t>(j)) *
             static_cast<std::size_t>(b) +
         static_cast<std::size_t>(k);
}

// Returns the first l failing associativity for the triple (i, j, k), or -1.
int tensor_failure_at(std::span<const std::int64_t> a, int b, int i, int j, int k) {
  for (int l = 0; l < b; ++l) {
    std::int64_t left = 0;
    std::int64_t right = 0;
    for (int s = 0; s < b; ++s) {
      left += a[tensor_at(b, i, j, s)] * a[tensor_at(b, s, k, l)];
      right += a[tensor_at(b, j, k, s)] * a[tensor_at(b, i, s, l)];
    }
    if (left != right) return l;
  }
  return -1;
}

void accumulate_column(const FiniteGroup& g, std::span<const double> weights, int t,
                       std::vector<double>& out) {
  const int k = g.num_classes();
  const int z = g.classes()[static_cast<std::size_t>(t)].front();
  for (int x = 0; x < g.order(); ++x) {
    const double w = weights[static_cast<std::size_t>(g.class_of(x))];
    if (w == 0.0) continue;
    const int s = g.class_of(g.multiply(g.inverse(x), z));
    out[static_cast<std::size_t>(s) * static_cast<std::size_t>(k) + static_cast<std::size_t>(t)] += w;
  }
}

}  // namespace

namespace serial {

std::optional<std::array<int, 3>> cayley_associativity_violation(std::span<const std::uint16_t> table,
                                                                  int order) {
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (!associative_at(table, order, a, b, c)) return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

std::vector<double> class_matrix(const FiniteGroup& group, std::span<const double> class_weights) {
  const auto k = static_cast<std::size_t>(group.num_classes());
  std::vector<double> out(k * k, 0.0);
  for (int t = 0; t < group.num_classes(); ++t) accumulate_column(group, class_weights, t, out);
  return out;
}

std::optional<std::size_t> first_violation(std::size_t count, const Predicate& holds) {
  for (std::size_t i = 0; i < count; ++i)
    if (!holds(i)) return i;
  return std::nullopt;
}

std::optional<std::array<int, 4>> tensor_associativity_violation(std::span<const std::int64_t> tensor,
                                                                  int rank) {
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      for (int k = 0; k < rank; ++k)
        if (int l = tensor_failure_at(tensor, rank, i, j, k); l >= 0)
          return std::array<int, 4>{i, j, k, l};
  return std::nullopt;
}

}  // namespace serial

namespace parallel {

std::optional<std::size_t> first_violation(std::size_t count, const Predicate& holds) {
  std::atomic<std::size_t> found{count};
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx >= found.load(std::memory_order_relaxed)) continue;
    if (!holds(idx)) {
      std::size_t current = found.load(std::memory_order_relaxed);
      while (idx < current && !found.compare_exchange_weak(current, idx, std::memory_order_relaxed)) {
      }
    }
  }
  const std::size_t result = found.load();
  if (result == count) return std::nullopt;
  return result;
}

std::optional<std::array<int, 3>> cayley_associativity_violation(std::span<const std::uint16_t> table,
                                                                  int order) {
  const auto n = static_cast<std::size_t>(order);
  auto hit = first_violation(n * n, [&](std::size_t ab) {
    const int a = static_cast<int>(ab / n);
    const int b = static_cast<int>(ab % n);
    for (int c = 0; c < order; ++c)
      if (!associative_at(table, order, a, b, c)) return false;
    return true;
  });
  if (!hit) return std::nullopt;
  const int a = static_cast<int>(*hit / n);
  const int b = static_cast<int>(*hit % n);
  for (int c = 0; c < order; ++c)
    if (!associative_at(table, order, a, b, c)) return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

std::vector<double> class_matrix(const FiniteGroup& group, std::span<const double> class_weights) {
  const int k = group.num_classes();
  std::vector<double> out(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0.0);
  // Each column t is written by exactly one iteration.
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < k; ++t) accumulate_column(group, class_weights, t, out);
  return out;
}

std::optional<std::array<int, 4>> tensor_associativity_violation(std::span<const std::int64_t> tensor,
                                                                  int rank) {
  const auto b = static_cast<std::size_t>(rank);
  auto hit = first_violation(b * b * b, [&](std::size_t ijk) {
    const int i = static_cast<int>(ijk / (b * b));
    const int j = static_cast<int>((ijk / b) % b);
    const int k = static_cast<int>(ijk % b);
    return tensor_failure_at(tensor, rank, i, j, k) < 0;
  });
  if (!hit) return std::nullopt;
  const int i = static_cast<int>(*hit / (b * b));
  const int j = static_cast<int>((*hit / b) % b);
  const int k = static_cast<int>(*hit % b);
  return std::array<int, 4>{i, j, k, tensor_failure_at(tensor, rank, i, j, k)};
}

}  // namespace parallel

}  // namespace fusionkit::kernels
