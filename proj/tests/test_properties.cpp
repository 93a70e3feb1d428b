// Randomized invariants over generated groups and subgroups. Generators are
// hand-rolled on a fixed-seed mt19937 so failures reproduce.

#include <cmath>
#include <random>

#include "doctest.h"
#include "fusionkit/diagram.hpp"
#include "fusionkit/pair_algebra.hpp"
#include "fusionkit/serialize.hpp"
#include "oracles.hpp"

using namespace fusionkit;

namespace {

std::string random_spec(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  switch (pick(0, 6)) {
    case 0: return "Z" + std::to_string(pick(1, 9));
    case 1: return "S" + std::to_string(pick(2, 4));
    case 2: return "A4";
    case 3: return "D" + std::to_string(pick(3, 6));
    case 4: return "Z" + std::to_string(pick(2, 3)) + "xS3";
    case 5: return "semidirect(Z" + std::to_string(pick(3, 5)) + ",Z" + std::to_string(2 * pick(1, 2)) + ",inv)";
    default: return "Z2xZ2xZ" + std::to_string(pick(1, 3));
  }
}

SubgroupEmbedding random_subgroup(const GroupPtr& g, std::mt19937& rng) {
  std::vector<int> gens;
  const int k = static_cast<int>(rng() % 3);
  for (int i = 0; i < k; ++i) gens.push_back(static_cast<int>(rng() % static_cast<unsigned>(g->order())));
  return subgroup(g, gens);
}

struct Case {
  std::string spec;
  SubgroupEmbedding sub;
};

std::vector<Case> cases() {
  std::mt19937 rng(20241016);
  std::vector<Case> out;
  while (out.size() < 40) {
    const auto spec = random_spec(rng);
    const auto g = build_group(spec);
    out.push_back({spec, random_subgroup(g, rng)});
  }
  return out;
}

std::string name(const Case& c) {
  std::string s = c.spec + " > {";
  for (int m : c.sub.members()) s += c.sub.parent()->label(m) + " ";
  return s + "}";
}

}  // namespace

TEST_CASE("character tables of generated groups") {
  for (const auto& c : cases()) {
    const auto& g = c.sub.parent();
    const auto t = character_table(g);
    int squares = 0;
    for (const auto& chi : t->irreducibles()) squares += chi.degree() * chi.degree();
    CHECK_MESSAGE(squares == g->order(), c.spec);
    for (int x = 0; x < g->num_classes(); ++x)
      for (int y = 0; y < g->num_classes(); ++y) {
        Complex s = 0;
        for (const auto& chi : t->irreducibles()) s += chi.function().at_class(x) * std::conj(chi.function().at_class(y));
        const double want = x == y ? double(g->order()) / g->class_size(x) : 0.0;
        CHECK(std::abs(s - want) < 1e-8);
      }
  }
}

TEST_CASE("admissibility, associativity and A4 coincide") {
  for (const auto& c : cases()) {
    const auto ctx = PairContext::make(c.sub);
    const bool adm = is_admissible(ctx).admissible;
    CHECK_MESSAGE(adm == oracle::admissible(c.sub, *ctx.subgroup_table, 1e-8), name(c));
    CHECK_MESSAGE(adm == verify_associativity(ctx).a4().passed, name(c));
    CHECK_MESSAGE(adm == oracle::associative(convolution_algebra(ctx)), name(c));
  }
}

TEST_CASE("invariants of generated pair algebras") {
  for (const auto& c : cases()) {
    const auto ctx = PairContext::make(c.sub);
    if (!is_admissible(ctx).admissible) continue;
    const auto f = pair_algebra(ctx);
    INFO(name(c));
    CHECK(check_fusion_axioms(f).ok());
    const auto d = dimension_function(f);
    const int n = f.rank();
    for (int i = 0; i < n; ++i) {
      // Involution preserves dimensions.
      CHECK(std::abs(d[f.involution(i)] - d[i]) < 1e-8);
      // Multiplicativity.
      for (int j = 0; j < n; ++j) {
        double s = 0;
        for (auto [k, a] : f.product(i, j)) s += static_cast<double>(a) * d[k];
        CHECK(std::abs(s - d[i] * d[j]) < 1e-8 * std::max(1.0, s));
      }
    }
    CHECK(f.involution(0) == 0);
    const auto h = normalize_to_hypergroup(f, d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double row = 0;
        for (int k = 0; k < n; ++k) {
          row += h.coefficient(i, j, k);
          CHECK(std::abs(h.coefficient(i, j, k) * d[i] * d[j] / d[k] - static_cast<double>(f.coefficient(i, j, k))) <
                1e-6);
        }
        CHECK(std::abs(row - 1) < 1e-8);
      }
    CHECK(deserialize_algebra(serialize(f)) == f);
  }
}

TEST_CASE("reciprocity and the degree identity on generated pairs") {
  for (const auto& c : cases()) {
    const auto ctx = PairContext::make(c.sub);
    INFO(name(c));
    const auto d = frobenius_diagram(ctx);
    CHECK(degree_identity_holds(d));
    for (std::size_t j = 0; j < ctx.subgroup_table->size(); ++j) {
      const auto ind = oracle::induce((*ctx.subgroup_table)[j].function(), c.sub);
      for (std::size_t i = 0; i < ctx.group_table->size(); ++i) {
        const auto m = oracle::inner(ind, oracle::on_elements((*ctx.group_table)[i].function()));
        CHECK(d.multiplicity(static_cast<int>(i), static_cast<int>(j)) == std::llround(m.real()));
      }
    }
  }
}

TEST_CASE("joins and Z2 doubling of character algebras") {
  std::mt19937 rng(99);
  for (int t = 0; t < 10; ++t) {
    const auto g = build_group(random_spec(rng));
    const auto f = character_fusion_algebra(*character_table(g));
    const auto d = dimension_function(f);
    const auto j = join(f, d);
    CHECK(check_fusion_axioms(j).ok());
    CHECK(oracle::associative(j));
    const auto dj = dimension_function(j);
    CHECK(dj[f.rank()] == doctest::Approx(std::sqrt(double(g->order()))));
    const auto z = direct_product_with_z2(f);
    CHECK(check_fusion_axioms(z).ok());
    CHECK(algebra_isomorphic(j, pair_algebra(PairContext::make(trivial_subgroup(g)))));
    CHECK(algebra_isomorphic(z, pair_algebra(PairContext::make(whole_group(g)))));
  }
}
