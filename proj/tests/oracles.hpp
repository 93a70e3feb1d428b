#pragma once

// Element-level reference computations, written independently of the
// class-function code paths in the library.

#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fusionkit/character.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/group.hpp"

namespace oracle {

using fusionkit::Complex;
using fusionkit::FiniteGroup;
using fusionkit::SubgroupEmbedding;

// Conjugacy classes as sets, by orbit enumeration.
inline std::set<std::set<int>> classes(const FiniteGroup& g) {
  std::set<std::set<int>> out;
  for (int x = 0; x < g.order(); ++x) {
    std::set<int> orbit;
    for (int s = 0; s < g.order(); ++s) orbit.insert(g.multiply(g.multiply(s, x), g.inverse(s)));
    out.insert(orbit);
  }
  return out;
}

// Values of f on every element of its group.
inline std::vector<Complex> on_elements(const fusionkit::ClassFunction& f) {
  std::vector<Complex> v(static_cast<std::size_t>(f.group()->order()));
  for (int x = 0; x < f.group()->order(); ++x) v[static_cast<std::size_t>(x)] = f(x);
  return v;
}

// Induction by a left transversal: ind f(g) = sum_t f(t^-1 g t), f zero off H.
inline std::vector<Complex> induce(const fusionkit::ClassFunction& f, const SubgroupEmbedding& sub) {
  const FiniteGroup& g = *sub.parent();
  std::vector<int> transversal;
  std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
  for (int t = 0; t < g.order(); ++t) {
    if (covered[static_cast<std::size_t>(t)]) continue;
    transversal.push_back(t);
    for (int h : sub.members()) covered[static_cast<std::size_t>(g.multiply(t, h))] = true;
  }
  std::vector<Complex> out(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    for (int t : transversal) {
      const int y = g.multiply(g.multiply(g.inverse(t), x), t);
      if (auto local = sub.from_parent(y)) out[static_cast<std::size_t>(x)] += f(*local);
    }
  return out;
}

// (1/|G|) sum_x a(x) conj(b(x)).
inline Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s / static_cast<double>(a.size());
}

inline std::vector<Complex> restrict(const fusionkit::ClassFunction& f, const SubgroupEmbedding& sub) {
  std::vector<Complex> out;
  for (int m : sub.members()) out.push_back(f(m));
  return out;
}

// Every g in H (not only class representatives) and every s in G with
// s g s^-1 in H.
inline bool admissible(const SubgroupEmbedding& sub, const fusionkit::CharacterTable& taus, double eps) {
  const FiniteGroup& g = *sub.parent();
  for (int x : sub.members())
    for (int s = 0; s < g.order(); ++s) {
      const int y = g.conjugate(s, x);
      if (!sub.contains(y)) continue;
      for (const auto& tau : taus.irreducibles())
        if (std::abs(tau.function()(*sub.from_parent(x)) - tau.function()(*sub.from_parent(y))) > eps) return false;
    }
  return true;
}

// Exact associativity of a dense tensor over all basis triples.
inline bool associative(const fusionkit::FusionAlgebra& f) {
  const int n = f.rank();
  const auto t = f.dense();
  auto at = [&](int i, int j, int k) { return t[(static_cast<std::size_t>(i) * n + j) * n + k]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          std::int64_t lhs = 0;
          std::int64_t rhs = 0;
          for (int s = 0; s < n; ++s) {
            lhs += at(i, j, s) * at(s, k, l);
            rhs += at(j, k, s) * at(i, s, l);
          }
          if (lhs != rhs) return false;
        }
  return true;
}

}  // namespace oracle
