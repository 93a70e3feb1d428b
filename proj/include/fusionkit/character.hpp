#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "fusionkit/group.hpp"
#include "fusionkit/tolerances.hpp"

namespace fusionkit {

using Complex = std::complex<double>;

/// A complex-valued function on G, constant on conjugacy classes, stored as
/// one value per class (in the group's class order).
class ClassFunction {
 public:
  /// Throws InvalidSpec if `values` does not have one entry per class.
  ClassFunction(GroupPtr group, std::vector<Complex> values);

  static ClassFunction constant(GroupPtr group, Complex value);
  /// |G| at the identity, zero elsewhere.
  static ClassFunction regular(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const std::vector<Complex>& values() const { return values_; }
  Complex at_class(int c) const { return values_[static_cast<std::size_t>(c)]; }
  Complex operator()(int element) const { return at_class(group_->class_of(element)); }
  Complex at_identity() const { return values_.front(); }

  ClassFunction conjugated() const;
  ClassFunction scaled(Complex factor) const;
  /// Throws GroupMismatch.
  ClassFunction plus(const ClassFunction& other) const;

  bool approx_equal(const ClassFunction& other, double eps) const;

 private:
  GroupPtr group_;
  std::vector<Complex> values_;
};

/// A character: a class function whose value at the identity is a positive
/// integer, its degree.
class Character {
 public:
  /// Throws NotIntegral if the value at the identity is not a positive
  /// integer within `tol.integral`.
  Character(ClassFunction values, bool irreducible, const Tolerances& tol = {});

  const ClassFunction& function() const { return function_; }
  const GroupPtr& group() const { return function_.group(); }
  int degree() const { return degree_; }
  bool irreducible() const { return irreducible_; }
  /// Ch / degree.
  ClassFunction normalized() const { return function_.scaled(1.0 / degree_); }

 private:
  ClassFunction function_;
  int degree_;
  bool irreducible_;
};

class CharacterTable {
 public:
  CharacterTable(GroupPtr group, std::vector<Character> irreducibles);

  const GroupPtr& group() const { return group_; }
  const std::vector<Character>& irreducibles() const { return irreducibles_; }
  const Character& operator[](std::size_t i) const { return irreducibles_[i]; }
  std::size_t size() const { return irreducibles_.size(); }
  std::vector<int> degrees() const;
  /// Index of the irreducible equal to `f` within `eps`, or -1.
  int find(const ClassFunction& f, double eps) const;
  /// Index of the complex conjugate of irreducible i.
  int conjugate_index(int i, double eps) const;

 private:
  GroupPtr group_;
  std::vector<Character> irreducibles_;
};

using CharacterTablePtr = std::shared_ptr<const CharacterTable>;

/// Irreducible characters of G by the class-algebra eigenvector method.
/// Rows: trivial first, then by ascending degree, then lexicographically by
/// values in class order. Cached per group object. Throws NumericalFailure
/// when the eigensolver fails to separate characters after 20 attempts.
CharacterTablePtr character_table(const GroupPtr& group);
/// Uncached computation with an explicit RNG seed.
CharacterTablePtr compute_character_table(const GroupPtr& group, std::uint32_t seed);

/// (1/|G|) sum_g f(g) conj(h(g)). Throws GroupMismatch.
Complex inner_product(const ClassFunction& f, const ClassFunction& h);
/// Throws GroupMismatch.
ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b);
ClassFunction restrict_to(const ClassFunction& f, const SubgroupEmbedding& sub);
/// Ch(ind f)(g) = (1/|H|) sum_{s in G} f(s g s^-1), f taken as zero off H.
ClassFunction induce(const ClassFunction& f, const SubgroupEmbedding& sub);
/// (1/|G|) sum_{s in G} f(s g s^-1); induce() equals index times this.
ClassFunction induce_average(const ClassFunction& f, const SubgroupEmbedding& sub);

/// Raw inner products with every irreducible, before rounding.
std::vector<Complex> decompose_raw(const ClassFunction& f, const CharacterTable& table);
/// Multiplicity of every irreducible in f. Throws NotIntegral or
/// NotNonnegative for a virtual or non-character input, GroupMismatch for a
/// function on another group.
std::vector<std::int64_t> decompose(const ClassFunction& f, const CharacterTable& table,
                                    const Tolerances& tol = {});

struct FrobeniusMultiplicity {
  std::int64_t multiplicity = 0;
  double via_induce = 0;    // <ind tau, pi>_G
  double via_restrict = 0;  // <tau, res pi>_H
};

/// [ind tau : pi] = [tau : res pi], computed both ways. Throws
/// ReciprocityViolation if the two disagree or are not integral.
FrobeniusMultiplicity frobenius_multiplicity(const SubgroupEmbedding& sub, const Character& tau,
                                             const Character& pi, const Tolerances& tol = {});

}  // namespace fusionkit
