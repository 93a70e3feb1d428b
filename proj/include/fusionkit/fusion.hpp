#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusionkit/character.hpp"
#include "fusionkit/tolerances.hpp"

namespace fusionkit {

struct BasisLabel {
  enum class Tag { Circle, Bullet, Abstract };
  Tag tag = Tag::Abstract;
  // Irreducible index for Circle (irreducible of G) and Bullet (of the
  // subgroup); -1 otherwise.
  int origin = -1;
  std::string name;

  bool operator==(const BasisLabel&) const = default;
};

std::string_view to_string(BasisLabel::Tag tag);

/// A finite based algebra with nonnegative integer structure constants,
/// X_i X_j = sum_k a[i][j][k] X_k, unit at basis index 0.
///
/// Products are stored sparsely: product(i, j) lists the (k, a) with a != 0,
/// sorted by k. The constructor only checks shapes; the axioms are checked by
/// check_fusion_axioms.
class FusionAlgebra {
 public:
  using Term = std::pair<int, std::int64_t>;
  using Product = std::vector<Term>;

  /// Throws InvalidSpec on inconsistent sizes or out-of-range indices.
  FusionAlgebra(std::vector<BasisLabel> basis, std::vector<int> involution,
                std::vector<std::vector<Product>> products);
  /// From a dense rank^3 tensor indexed [i][j][k].
  static FusionAlgebra from_dense(std::vector<BasisLabel> basis, std::vector<int> involution,
                                  const std::vector<std::int64_t>& tensor);

  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisLabel>& basis() const { return basis_; }
  const BasisLabel& label(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  int involution(int i) const { return involution_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& involutions() const { return involution_; }
  const Product& product(int i, int j) const {
    return products_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  std::int64_t coefficient(int i, int j, int k) const;
  std::vector<std::int64_t> dense() const;
  /// Index of the basis element named `name`, or -1.
  int find(std::string_view name) const;

  bool operator==(const FusionAlgebra&) const = default;

 private:
  std::vector<BasisLabel> basis_;
  std::vector<int> involution_;
  std::vector<std::vector<Product>> products_;
};

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::vector<int> at;  // first violating index tuple
  std::string detail;

  /// "F3 violated at (1,1,0)" or "F3 ok".
  std::string message() const;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool ok() const;
  const AxiomCheck* first_failure() const;
  const AxiomCheck* find(std::string_view axiom) const;
};

/// F1 (unit law and associativity), F2 (nonnegative integers), F3 (unit
/// coefficient of X_i X_j is 1 exactly for j = X_i*, 0 otherwise) and the
/// involution being an anti-automorphism.
AxiomReport check_fusion_axioms(const FusionAlgebra& algebra);

struct DimensionFunction {
  std::vector<double> values;
  double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
};

/// Perron-Frobenius eigenvalue of each left-multiplication matrix, verified
/// to be multiplicative. Throws NoPositiveSolution otherwise.
DimensionFunction dimension_function(const FusionAlgebra& algebra, const Tolerances& tol = {});

/// R = sum_k d(X_k) X_k, after checking X_i R = d(X_i) R for every i.
/// Throws HaarViolation.
std::vector<double> haar_element(const FusionAlgebra& algebra, const DimensionFunction& d,
                                 const Tolerances& tol = {});

class Hypergroup {
 public:
  Hypergroup(std::vector<BasisLabel> basis, std::vector<int> involution, std::vector<double> coefficients,
             std::vector<double> weights);

  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisLabel>& basis() const { return basis_; }
  int involution(int i) const { return involution_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& involutions() const { return involution_; }
  double coefficient(int i, int j, int k) const {
    const auto n = static_cast<std::size_t>(rank());
    return coefficients_[(static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
                         static_cast<std::size_t>(k)];
  }
  const std::vector<double>& coefficients() const { return coefficients_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<BasisLabel> basis_;
  std::vector<int> involution_;
  std::vector<double> coefficients_;
  std::vector<double> weights_;
};

/// H1 (unit law, associativity), H2 (nonnegative, rows summing to 1), H3
/// (unit coefficient nonzero exactly at the involution) and weights equal to
/// 1 / c[i][i*][0].
AxiomReport check_hypergroup_axioms(const Hypergroup& h, const Tolerances& tol = {});

/// c[i][j][k] = a[i][j][k] d_k / (d_i d_j), weights d^2. Throws
/// NoPositiveSolution if the result fails the hypergroup axioms.
Hypergroup normalize_to_hypergroup(const FusionAlgebra& algebra, const DimensionFunction& d,
                                   const Tolerances& tol = {});

/// Adjoins Y with X_i Y = Y X_i = d(X_i) Y and Y Y = R. Throws
/// NonIntegralDimensions unless every d(X_i) is an integer.
FusionAlgebra join(const FusionAlgebra& algebra, const DimensionFunction& d, const Tolerances& tol = {});

/// F x Z2: the basis doubled, the second copy odd. Circle labels of the odd
/// copy become Bullet.
FusionAlgebra direct_product_with_z2(const FusionAlgebra& algebra);

/// Group algebra of a finite group, basis tagged Abstract and named by
/// element label.
FusionAlgebra group_algebra(const FiniteGroup& group);

/// The fusion algebra of the irreducible characters of G, tagged Circle.
FusionAlgebra character_fusion_algebra(const CharacterTable& table, const Tolerances& tol = {});

/// A bijection sigma with a2[sigma i][sigma j][sigma k] = a1[i][j][k] that fixes
/// the unit, commutes with the involutions and preserves tags.
std::optional<std::vector<int>> algebra_isomorphic(const FusionAlgebra& a, const FusionAlgebra& b);

}  // namespace fusionkit
