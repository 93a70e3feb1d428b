#include <algorithm>

#include "doctest.h"
#include "fusionkit/errors.hpp"
#include "fusionkit/fixtures.hpp"
#include "fusionkit/pair_algebra.hpp"
#include "oracles.hpp"

using namespace fusionkit;

namespace {

PairContext ctx_of(const char* group, std::vector<std::string> gens) {
  return PairContext::make(subgroup(build_group(group), gens));
}

bool has(const std::vector<Certificate>& certs, CertificateKind k) {
  return std::any_of(certs.begin(), certs.end(), [&](const Certificate& c) { return c.kind == k && c.applies; });
}

}  // namespace

TEST_CASE("S3 over a transposition is admissible by conjugacy control") {
  const auto ctx = ctx_of("S3", {"(12)"});
  CHECK(is_admissible(ctx).admissible);
  const auto certs = certificates(ctx);
  CHECK(has(certs, CertificateKind::ConjugacyControl));
  CHECK_FALSE(has(certs, CertificateKind::AbelianGroup));
  CHECK(certificate_name(CertificateKind::ConjugacyControl) == "Lemma 3.11");
}

TEST_CASE("S3 over Z3 is refused with a checkable witness") {
  const auto ctx = ctx_of("S3", {"(123)"});
  const auto adm = is_admissible(ctx);
  REQUIRE_FALSE(adm.admissible);
  REQUIRE(adm.witness);
  const auto& w = *adm.witness;
  const FiniteGroup& g = ctx.group();
  const auto& tau = (*ctx.subgroup_table)[static_cast<std::size_t>(w.tau)].function();
  const int y = g.conjugate(w.s, w.g);
  REQUIRE(ctx.sub.contains(w.g));
  REQUIRE(ctx.sub.contains(y));
  CHECK(std::abs(tau(*ctx.sub.from_parent(w.g)) - tau(*ctx.sub.from_parent(y))) > 0.5);
  try {
    pair_algebra(ctx);
    FAIL("expected NotAdmissible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAdmissible);
    CHECK(std::string(e.what()).find("(123)") != std::string::npos);
  }
  const auto rel = verify_associativity(ctx);
  CHECK(rel.relations[0].passed);
  CHECK(rel.relations[1].passed);
  CHECK(rel.relations[2].passed);
  CHECK_FALSE(rel.a4().passed);
  CHECK(rel.a4().name == "A4");
  const auto result = build_pair_algebra(ctx);
  CHECK_FALSE(result.algebra);
  CHECK_FALSE(result.report.ok());
}

TEST_CASE("admissibility agrees with the element-level oracle") {
  for (const auto& p : pair_catalog()) {
    const auto ctx = make_context(p);
    CHECK_MESSAGE(is_admissible(ctx).admissible == oracle::admissible(ctx.sub, *ctx.subgroup_table, 1e-8), p.name);
  }
}

TEST_CASE("certificates are sound over the catalog") {
  for (const auto& p : pair_catalog()) {
    const auto ctx = make_context(p);
    const bool adm = is_admissible(ctx).admissible;
    for (const auto& c : certificates(ctx, via_subgroup(p, ctx)))
      if (c.applies) CHECK_MESSAGE(adm, (p.name + " " + certificate_name(c.kind)));
  }
}

TEST_CASE("individual certificates") {
  CHECK(has(certificates(ctx_of("Z4", {"2"})), CertificateKind::AbelianGroup));
  CHECK(has(certificates(ctx_of("D4", {"r2"})), CertificateKind::CentralSubgroup));
  CHECK(has(certificates(ctx_of("D4", {"r2"})), CertificateKind::TrivialCoadjoint));
  CHECK(has(certificates(ctx_of("D4", {"s"})), CertificateKind::SemidirectComplement));
  CHECK(has(certificates(ctx_of("S4", {"(12)", "(123)"})), CertificateKind::ExtendableCharacters));
  CHECK(has(certificates(ctx_of("A4", {"(123)"})), CertificateKind::ExtendableCharacters));
  CHECK_FALSE(has(certificates(ctx_of("S3", {"(123)"})), CertificateKind::ExtendableCharacters));
  const auto ctx = ctx_of("S4", {"(12)"});
  const auto via = subgroup(ctx.sub.parent(), std::vector<std::string>{"(12)", "(123)"});
  CHECK(has(certificates(ctx, via), CertificateKind::Transitivity));
  CHECK_FALSE(has(certificates(ctx), CertificateKind::Transitivity));
}

TEST_CASE("coadjoint action") {
  CHECK_THROWS_AS(coadjoint_action(ctx_of("S3", {"(12)"})), Error);
  CHECK(coadjoint_action(ctx_of("D4", {"r2"})).trivial());
  const auto a = coadjoint_action(ctx_of("S3", {"(123)"}));
  CHECK_FALSE(a.trivial());
  // The transposition swaps the two non-trivial characters of Z3.
  const int t = *build_group("S3")->element("(12)");
  std::vector<int> img = a.image[static_cast<std::size_t>(t)];
  std::sort(img.begin(), img.end());
  CHECK(img == std::vector<int>{0, 1, 2});
  CHECK(a.image[static_cast<std::size_t>(t)][0] == 0);
  CHECK(a.image[static_cast<std::size_t>(t)][1] == 2);
}

TEST_CASE("convolution rules against element-level induction") {
  const auto ctx = ctx_of("S4", {"(12)", "(123)"});
  const auto f = pair_algebra(ctx);
  const auto& pis = *ctx.group_table;
  const auto& taus = *ctx.subgroup_table;
  const int p = static_cast<int>(pis.size());
  const int q = static_cast<int>(taus.size());
  // rho_i rho_j = decomposition of ind(tau_i tau_j).
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const auto prod = pointwise_product(taus[i].function(), taus[j].function());
      const auto ind = oracle::induce(prod, ctx.sub);
      for (int k = 0; k < p; ++k) {
        const auto m = oracle::inner(ind, oracle::on_elements(pis[k].function()));
        CHECK(f.coefficient(p + i, p + j, k) == std::llround(m.real()));
      }
      for (int k = 0; k < q; ++k) CHECK(f.coefficient(p + i, p + j, p + k) == 0);
    }
  // gamma_i rho_j = decomposition of res(pi_i) tau_j.
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      const auto res = oracle::restrict(pis[i].function(), ctx.sub);
      for (int k = 0; k < q; ++k) {
        std::vector<Complex> v;
        for (int y = 0; y < ctx.sub.order(); ++y)
          v.push_back(res[static_cast<std::size_t>(y)] * taus[j].function()(y));
        const auto m = oracle::inner(v, oracle::on_elements(taus[k].function()));
        CHECK(f.coefficient(i, p + j, p + k) == std::llround(m.real()));
        CHECK(f.coefficient(p + j, i, p + k) == std::llround(m.real()));
      }
    }
}

TEST_CASE("graded support of every pair algebra") {
  for (const auto& cp : pair_catalog()) {
    const auto ctx = make_context(cp);
    if (!is_admissible(ctx).admissible) continue;
    const auto f = pair_algebra(ctx);
    const auto tag = [&](int i) { return f.label(i).tag; };
    for (int i = 0; i < f.rank(); ++i)
      for (int j = 0; j < f.rank(); ++j) {
        const bool odd = (tag(i) == BasisLabel::Tag::Bullet) != (tag(j) == BasisLabel::Tag::Bullet);
        for (auto [k, a] : f.product(i, j))
          CHECK((tag(k) == BasisLabel::Tag::Bullet) == odd);
      }
  }
}

TEST_CASE("associativity relations hold exactly when admissible") {
  for (const auto& cp : pair_catalog()) {
    const auto ctx = make_context(cp);
    const auto conv = convolution_algebra(ctx);
    const bool adm = is_admissible(ctx).admissible;
    CHECK_MESSAGE(oracle::associative(conv) == adm, cp.name);
    if (adm) CHECK(verify_associativity(ctx).all_passed());
  }
}

TEST_CASE("dimensions of the bullet block") {
  // d(rho)^2 = [G:G0] deg(tau)^2.
  for (const auto& cp : pair_catalog()) {
    const auto ctx = make_context(cp);
    if (!is_admissible(ctx).admissible) continue;
    const auto f = pair_algebra(ctx);
    const auto d = dimension_function(f);
    const int p = static_cast<int>(ctx.group_table->size());
    for (std::size_t j = 0; j < ctx.subgroup_table->size(); ++j) {
      const double deg = (*ctx.subgroup_table)[j].degree();
      CHECK(d[p + static_cast<int>(j)] * d[p + static_cast<int>(j)] == doctest::Approx(ctx.sub.index() * deg * deg));
    }
    for (int i = 0; i < p; ++i) CHECK(d[i] == doctest::Approx((*ctx.group_table)[static_cast<std::size_t>(i)].degree()));
  }
}
