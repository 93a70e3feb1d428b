#include "fusionkit/pair_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fusionkit/errors.hpp"
#include "fusionkit/kernels.hpp"

namespace fusionkit {

namespace {

std::string fmt(Complex z) {
  char buf[96];
  if (std::abs(z.imag()) < 1e-12)
    std::snprintf(buf, sizeof buf, "%.10g", z.real());
  else
    std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
  return buf;
}

bool close(Complex a, Complex b, double eps) {
  return std::abs(a - b) <= eps * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

const ClassFunction& irr(const CharacterTable& t, int i) { return t[static_cast<std::size_t>(i)].function(); }

// First class where two class functions differ, or -1.
int differing_class(const ClassFunction& a, const ClassFunction& b, double eps) {
  for (std::size_t c = 0; c < a.values().size(); ++c)
    if (!close(a.values()[c], b.values()[c], eps)) return static_cast<int>(c);
  return -1;
}

}  // namespace

PairContext PairContext::make(SubgroupEmbedding sub, const Tolerances& tol) {
  PairContext ctx{sub, character_table(sub.parent()), character_table(sub.as_group()), tol};
  return ctx;
}

Admissibility is_admissible(const PairContext& ctx) {
  const FiniteGroup& g = ctx.group();
  const FiniteGroup& h = ctx.subgroup();
  const CharacterTable& taus = *ctx.subgroup_table;
  for (int c = 0; c < h.num_classes(); ++c) {
    const int x = ctx.sub.to_parent(h.classes()[static_cast<std::size_t>(c)].front());
    for (int s : x_set(ctx.sub, x)) {
      const int y = *ctx.sub.from_parent(g.conjugate(s, x));
      for (int t = 0; t < static_cast<int>(taus.size()); ++t) {
        const Complex at_g = irr(taus, t)(*ctx.sub.from_parent(x));
        const Complex at_conj = irr(taus, t)(y);
        if (!close(at_g, at_conj, ctx.tol.eq))
          return Admissibility{false, AdmissibilityWitness{t, x, s, at_g, at_conj}};
      }
    }
  }
  return {};
}

std::string describe(const PairContext& ctx, const AdmissibilityWitness& w) {
  const FiniteGroup& g = ctx.group();
  return "τ" + std::to_string(w.tau) + "(s g s^-1) = " + fmt(w.at_conjugate) + " but τ" + std::to_string(w.tau) +
         "(g) = " + fmt(w.at_g) + " for g = " + g.label(w.g) + ", s = " + g.label(w.s) +
         ", s g s^-1 = " + g.label(g.conjugate(w.s, w.g));
}

std::string certificate_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::AbelianGroup: return "Lemma 3.7";
    case CertificateKind::ExtendableCharacters: return "Lemma 3.9";
    case CertificateKind::ConjugacyControl: return "Lemma 3.11";
    case CertificateKind::Transitivity: return "Lemma 3.13";
    case CertificateKind::TrivialCoadjoint: return "Lemma 3.15";
    case CertificateKind::CentralSubgroup: return "Lemma 3.16";
    case CertificateKind::SemidirectComplement: return "Corollary 3.10";
  }
  return "";
}

bool CoadjointAction::trivial() const {
  for (const auto& row : image)
    for (std::size_t t = 0; t < row.size(); ++t)
      if (row[t] != static_cast<int>(t)) return false;
  return true;
}

CoadjointAction coadjoint_action(const PairContext& ctx) {
  if (!is_normal(ctx.sub)) throw Error(ErrorKind::NotNormal, "coadjoint action needs a normal subgroup");
  const FiniteGroup& g = ctx.group();
  const FiniteGroup& h = ctx.subgroup();
  const CharacterTable& taus = *ctx.subgroup_table;
  CoadjointAction out;
  out.image.resize(static_cast<std::size_t>(g.order()));
  for (int s = 0; s < g.order(); ++s) {
    for (int t = 0; t < static_cast<int>(taus.size()); ++t) {
      std::vector<Complex> v(static_cast<std::size_t>(h.num_classes()));
      for (int c = 0; c < h.num_classes(); ++c) {
        const int x = ctx.sub.to_parent(h.classes()[static_cast<std::size_t>(c)].front());
        v[static_cast<std::size_t>(c)] = irr(taus, t)(*ctx.sub.from_parent(g.conjugate(s, x)));
      }
      const int j = taus.find(ClassFunction(ctx.sub.as_group(), std::move(v)), ctx.tol.eq);
      if (j < 0) throw Error(ErrorKind::InternalInconsistency, "conjugated character is not irreducible");
      out.image[static_cast<std::size_t>(s)].push_back(j);
    }
  }
  return out;
}

namespace {

Certificate abelian_certificate(const PairContext& ctx) {
  const bool ok = ctx.group().is_abelian();
  return {CertificateKind::AbelianGroup, ok, ok ? "G is abelian" : "G is not abelian"};
}

Certificate extension_certificate(const PairContext& ctx) {
  // An extension of an irreducible tau is itself irreducible of the same
  // degree, so it suffices to look for a single irreducible of G.
  const CharacterTable& pis = *ctx.group_table;
  const CharacterTable& taus = *ctx.subgroup_table;
  for (std::size_t t = 0; t < taus.size(); ++t) {
    bool found = false;
    for (std::size_t p = 0; p < pis.size() && !found; ++p)
      found = pis[p].degree() == taus[t].degree() &&
              restrict_to(pis[p].function(), ctx.sub).approx_equal(taus[t].function(), ctx.tol.eq);
    if (!found)
      return {CertificateKind::ExtendableCharacters, false, "τ" + std::to_string(t) + " has no extension to G"};
  }
  return {CertificateKind::ExtendableCharacters, true, "every irreducible of G0 extends to G"};
}

Certificate conjugacy_certificate(const PairContext& ctx) {
  const FiniteGroup& g = ctx.group();
  const FiniteGroup& h = ctx.subgroup();
  for (int c = 0; c < h.num_classes(); ++c) {
    const int hx = h.classes()[static_cast<std::size_t>(c)].front();
    const int x = ctx.sub.to_parent(hx);
    for (int s : x_set(ctx.sub, x)) {
      const int y = *ctx.sub.from_parent(g.conjugate(s, x));
      if (h.class_of(y) != c)
        return {CertificateKind::ConjugacyControl, false,
                "s g s^-1 not G0-conjugate to g for g = " + g.label(x) + ", s = " + g.label(s)};
    }
  }
  return {CertificateKind::ConjugacyControl, true, "G-conjugation into G0 is realized inside G0"};
}

Certificate transitivity_certificate(const PairContext& ctx, const SubgroupEmbedding& via) {
  const auto inner = relative_to(ctx.sub, via);
  const bool lower = is_admissible(PairContext::make(inner, ctx.tol)).admissible;
  const bool upper = is_admissible(PairContext::make(via, ctx.tol)).admissible;
  const bool ok = lower && upper;
  std::string detail = "(G1, G0) " + std::string(lower ? "admissible" : "not admissible") + ", (G, G1) " +
                       (upper ? "admissible" : "not admissible") + ", |G1| = " + std::to_string(via.order());
  return {CertificateKind::Transitivity, ok, detail};
}

Certificate coadjoint_certificate(const PairContext& ctx) {
  if (!is_normal(ctx.sub)) return {CertificateKind::TrivialCoadjoint, false, "G0 is not normal"};
  const bool ok = coadjoint_action(ctx).trivial();
  return {CertificateKind::TrivialCoadjoint, ok, ok ? "coadjoint action is trivial" : "coadjoint action is nontrivial"};
}

Certificate central_certificate(const PairContext& ctx) {
  if (!is_normal(ctx.sub)) return {CertificateKind::CentralSubgroup, false, "G0 is not normal"};
  if (!ctx.subgroup().is_abelian()) return {CertificateKind::CentralSubgroup, false, "G0 is not abelian"};
  const bool ok = centralizes(ctx.sub);
  return {CertificateKind::CentralSubgroup, ok, ok ? "G0 is central in G" : "G does not centralize G0"};
}

Certificate complement_certificate(const PairContext& ctx) {
  const auto& f = ctx.group().factorization();
  if (!f) return {CertificateKind::SemidirectComplement, false, "G has no recorded factorization"};
  auto complement = f->complement;
  std::sort(complement.begin(), complement.end());
  const bool ok = complement == ctx.sub.members();
  return {CertificateKind::SemidirectComplement, ok,
          ok ? "G0 is the acting factor of a semidirect product" : "G0 is not the recorded complement"};
}

}  // namespace

std::vector<Certificate> certificates(const PairContext& ctx, const std::optional<SubgroupEmbedding>& via) {
  std::vector<Certificate> out{abelian_certificate(ctx), extension_certificate(ctx), conjugacy_certificate(ctx)};
  if (via) out.push_back(transitivity_certificate(ctx, *via));
  out.push_back(coadjoint_certificate(ctx));
  out.push_back(central_certificate(ctx));
  out.push_back(complement_certificate(ctx));
  const bool admissible = is_admissible(ctx).admissible;
  for (const auto& c : out)
    if (c.applies && !admissible)
      throw Error(ErrorKind::InternalInconsistency,
                  certificate_name(c.kind) + " applies but the pair is not admissible");
  return out;
}

FusionAlgebra convolution_algebra(const PairContext& ctx) {
  const CharacterTable& pis = *ctx.group_table;
  const CharacterTable& taus = *ctx.subgroup_table;
  const int p = static_cast<int>(pis.size());
  const int q = static_cast<int>(taus.size());
  const int n = p + q;
  std::vector<BasisLabel> basis;
  std::vector<int> inv;
  for (int i = 0; i < p; ++i) {
    basis.push_back({BasisLabel::Tag::Circle, i, "γ" + std::to_string(i)});
    inv.push_back(pis.conjugate_index(i, ctx.tol.eq));
  }
  for (int j = 0; j < q; ++j) {
    basis.push_back({BasisLabel::Tag::Bullet, j, "ρ" + std::to_string(j)});
    inv.push_back(p + taus.conjugate_index(j, ctx.tol.eq));
  }
  if (std::find(inv.begin(), inv.end(), -1) != inv.end() ||
      std::any_of(inv.begin() + p, inv.end(), [p](int v) { return v < p; }))
    throw Error(ErrorKind::InternalInconsistency, "conjugate character missing from a table");

  std::vector<ClassFunction> restricted;
  for (int i = 0; i < p; ++i) restricted.push_back(restrict_to(irr(pis, i), ctx.sub));

  std::vector<std::vector<FusionAlgebra::Product>> prod(static_cast<std::size_t>(n),
                                                        std::vector<FusionAlgebra::Product>(static_cast<std::size_t>(n)));
  auto put = [&](int a, int b, const std::vector<std::int64_t>& m, int offset) {
    auto& out = prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k] != 0) out.emplace_back(static_cast<int>(k) + offset, m[k]);
  };
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) put(i, j, decompose(pointwise_product(irr(pis, i), irr(pis, j)), pis, ctx.tol), 0);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      const auto m = decompose(pointwise_product(restricted[static_cast<std::size_t>(i)], irr(taus, j)), taus, ctx.tol);
      put(i, p + j, m, p);
      put(p + j, i, m, p);
    }
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      put(p + i, p + j, decompose(induce(pointwise_product(irr(taus, i), irr(taus, j)), ctx.sub), pis, ctx.tol), 0);
  return FusionAlgebra(std::move(basis), std::move(inv), std::move(prod));
}

PairAlgebraResult build_pair_algebra(const PairContext& ctx, const std::optional<SubgroupEmbedding>& via) {
  PairAlgebraResult r;
  const auto adm = is_admissible(ctx);
  r.admissible = adm.admissible;
  r.witness = adm.witness;
  r.certificates = certificates(ctx, via);
  FusionAlgebra f = convolution_algebra(ctx);
  r.report = check_fusion_axioms(f);
  if (r.admissible) {
    if (const auto* bad = r.report.first_failure())
      throw Error(ErrorKind::InternalInconsistency, "admissible pair but " + bad->message());
    r.algebra = std::move(f);
  }
  return r;
}

FusionAlgebra pair_algebra(const PairContext& ctx) {
  auto r = build_pair_algebra(ctx);
  if (!r.admissible) throw Error(ErrorKind::NotAdmissible, "pair is not admissible: " + describe(ctx, *r.witness));
  return std::move(*r.algebra);
}

bool AssociativityReport::all_passed() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationCheck& r) { return r.passed; });
}

namespace {

// Runs `differs(i, j, k)` (returning the differing class or -1) over the
// cube [0, a) x [0, b) x [0, c) and records the lowest failing triple.
template <class F>
RelationCheck check_triples(std::string name, int a, int b, int c, const F& differs) {
  RelationCheck out{std::move(name), true, std::nullopt, -1};
  const auto total = static_cast<std::size_t>(a) * static_cast<std::size_t>(b) * static_cast<std::size_t>(c);
  auto decode = [&](std::size_t t) {
    const int k = static_cast<int>(t % static_cast<std::size_t>(c));
    const int j = static_cast<int>((t / static_cast<std::size_t>(c)) % static_cast<std::size_t>(b));
    const int i = static_cast<int>(t / (static_cast<std::size_t>(b) * static_cast<std::size_t>(c)));
    return std::array<int, 3>{i, j, k};
  };
  const auto hit = kernels::parallel::first_violation(total, [&](std::size_t t) {
    const auto [i, j, k] = decode(t);
    return differs(i, j, k) < 0;
  });
  if (hit) {
    out.passed = false;
    out.triple = decode(*hit);
    out.class_index = differs((*out.triple)[0], (*out.triple)[1], (*out.triple)[2]);
  }
  return out;
}

}  // namespace

AssociativityReport verify_associativity(const PairContext& ctx) {
  const CharacterTable& pis = *ctx.group_table;
  const CharacterTable& taus = *ctx.subgroup_table;
  const int p = static_cast<int>(pis.size());
  const int q = static_cast<int>(taus.size());
  const double eps = ctx.tol.eq;

  std::vector<ClassFunction> res;
  for (int i = 0; i < p; ++i) res.push_back(restrict_to(irr(pis, i), ctx.sub));
  // ind(tau_i tau_j) and its restriction, indexed i * q + j.
  std::vector<ClassFunction> ind;
  std::vector<ClassFunction> res_ind;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      ind.push_back(induce(pointwise_product(irr(taus, i), irr(taus, j)), ctx.sub));
      res_ind.push_back(restrict_to(ind.back(), ctx.sub));
    }
  auto at = [q](int i, int j) { return static_cast<std::size_t>(i * q + j); };

  AssociativityReport r;
  r.relations[0] = check_triples("A1", p, p, p, [&](int i, int j, int k) {
    return differing_class(pointwise_product(pointwise_product(irr(pis, i), irr(pis, j)), irr(pis, k)),
                           pointwise_product(irr(pis, i), pointwise_product(irr(pis, j), irr(pis, k))), eps);
  });
  r.relations[1] = check_triples("A2", q, p, p, [&](int t, int i, int j) {
    return differing_class(
        pointwise_product(pointwise_product(irr(taus, t), res[static_cast<std::size_t>(i)]), res[static_cast<std::size_t>(j)]),
        pointwise_product(irr(taus, t), restrict_to(pointwise_product(irr(pis, i), irr(pis, j)), ctx.sub)), eps);
  });
  r.relations[2] = check_triples("A3", q, q, p, [&](int i, int j, int k) {
    return differing_class(
        pointwise_product(ind[at(i, j)], irr(pis, k)),
        induce(pointwise_product(pointwise_product(irr(taus, i), irr(taus, j)), res[static_cast<std::size_t>(k)]), ctx.sub),
        eps);
  });
  r.relations[3] = check_triples("A4", q, q, q, [&](int i, int j, int k) {
    return differing_class(pointwise_product(res_ind[at(i, j)], irr(taus, k)),
                           pointwise_product(irr(taus, i), res_ind[at(j, k)]), eps);
  });
  return r;
}

}  // namespace fusionkit
