#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/character.hpp"
#include "fusionkit/fusion.hpp"

namespace fusionkit {

/// A subgroup G0 <= G together with both character tables.
struct PairContext {
  SubgroupEmbedding sub;
  CharacterTablePtr group_table;     // irreducibles of G
  CharacterTablePtr subgroup_table;  // irreducibles of G0
  Tolerances tol;

  static PairContext make(SubgroupEmbedding sub, const Tolerances& tol = {});

  const FiniteGroup& group() const { return *sub.parent(); }
  const FiniteGroup& subgroup() const { return *sub.as_group(); }
};

/// tau(s g s^-1) != tau(g) with g in G0 and s in X(g). Elements are parent
/// indices, tau an index into the subgroup table.
struct AdmissibilityWitness {
  int tau = 0;
  int g = 0;
  int s = 0;
  Complex at_g;
  Complex at_conjugate;
};

struct Admissibility {
  bool admissible = true;
  std::optional<AdmissibilityWitness> witness;
};

/// Checks the character condition over every irreducible of G0, every
/// G0-class representative g and every s in X(g).
Admissibility is_admissible(const PairContext& ctx);

std::string describe(const PairContext& ctx, const AdmissibilityWitness& w);

enum class CertificateKind {
  AbelianGroup,          // G abelian
  ExtendableCharacters,  // every irreducible of G0 is the restriction of one of G
  ConjugacyControl,      // s g s^-1 is G0-conjugate to g for s in X(g)
  Transitivity,          // through an intermediate G0 <= G1 <= G
  TrivialCoadjoint,      // G0 normal, coadjoint action trivial
  CentralSubgroup,       // G0 normal, abelian and centralized by G
  SemidirectComplement,  // G = H x| G0 as recorded at construction
};

/// Display name after the result it certifies, such as "Lemma 3.11".
std::string certificate_name(CertificateKind kind);

struct Certificate {
  CertificateKind kind;
  bool applies = false;
  std::string detail;
};

/// Evaluates every sufficient condition independently. Transitivity is only
/// evaluated when `via` is given. Throws InternalInconsistency if a condition
/// that applies contradicts is_admissible.
std::vector<Certificate> certificates(const PairContext& ctx, const std::optional<SubgroupEmbedding>& via = {});

struct CoadjointAction {
  // image[s][tau]: index of the irreducible g -> tau(s g s^-1).
  std::vector<std::vector<int>> image;
  bool trivial() const;
};

/// Throws NotNormal unless G0 is normal in G.
CoadjointAction coadjoint_action(const PairContext& ctx);

/// The four convolution rules evaluated and decomposed, whether or not the
/// pair is admissible. Basis: the irreducibles of G (Circle, "γi") in table
/// order, then those of G0 (Bullet, "ρj").
FusionAlgebra convolution_algebra(const PairContext& ctx);

struct PairAlgebraResult {
  std::optional<FusionAlgebra> algebra;  // present iff admissible
  bool admissible = false;
  std::optional<AdmissibilityWitness> witness;
  std::vector<Certificate> certificates;
  AxiomReport report;  // axioms of the convolution algebra
};

PairAlgebraResult build_pair_algebra(const PairContext& ctx, const std::optional<SubgroupEmbedding>& via = {});

/// The fusion rule algebra of an admissible pair. Throws NotAdmissible with
/// the witness in the message otherwise.
FusionAlgebra pair_algebra(const PairContext& ctx);

struct RelationCheck {
  std::string name;
  bool passed = true;
  std::optional<std::array<int, 3>> triple;  // basis-block indices
  int class_index = -1;                       // class where the sides differ
};

struct AssociativityReport {
  std::array<RelationCheck, 4> relations;
  bool all_passed() const;
  const RelationCheck& a4() const { return relations[3]; }
};

/// (A1) (chi_i chi_j) chi_k = chi_i (chi_j chi_k) on G
/// (A2) (tau res chi_i) res chi_j = tau res(chi_i chi_j) on G0
/// (A3) ind(tau_i tau_j) chi = ind(tau_i tau_j res chi) on G
/// (A4) res(ind(tau_i tau_j)) tau_k = tau_i res(ind(tau_j tau_k)) on G0
/// compared as class functions, without integer decomposition.
AssociativityReport verify_associativity(const PairContext& ctx);

}  // namespace fusionkit
