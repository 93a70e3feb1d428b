#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fusionkit {

inline constexpr int kMaxGroupOrder = 10000;
// Associativity is brute-forced at construction up to this order.
inline constexpr int kAssociativityCheckLimit = 256;

/// Normal factor and complement of a group built as a direct or semidirect
/// product, as element-index sets of the product.
struct Factorization {
  std::vector<int> normal;
  std::vector<int> complement;
  bool direct = false;
};

/// A finite group given by its Cayley table.
///
/// Elements are indices 0..order-1. Conjugacy classes are computed once at
/// construction and kept in canonical order: the identity class first, the
/// rest by (size, smallest member). Instances are immutable and are shared
/// through `std::shared_ptr<const FiniteGroup>`.
class FiniteGroup {
 public:
  struct Extras {
    std::optional<Factorization> factorization;
    // Set for groups of permutations of {1..degree}; enables cycle-notation
    // lookup of elements.
    std::optional<int> permutation_degree;
    // Permutation images (0-based) per element when permutation_degree is set.
    std::vector<std::vector<int>> permutations;
  };

  /// Validates the table (Latin square, identity, inverses, associativity up
  /// to kAssociativityCheckLimit) and throws Error(InvalidGroup) on failure.
  static std::shared_ptr<const FiniteGroup> create(const std::vector<std::vector<int>>& cayley,
                                                   std::vector<std::string> labels = {},
                                                   Extras extras = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int multiply(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(b)];
  }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// s g s^-1
  int conjugate(int s, int g) const { return multiply(multiply(s, g), inverse(s)); }

  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Looks an element up by label. "e" and "()" always name the identity; for
  /// permutation groups any cycle notation such as "(21)" or "(1,2)(3 4)" is
  /// accepted and canonicalized.
  std::optional<int> element(std::string_view label) const;

  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int a) const { return class_of_[static_cast<std::size_t>(a)]; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_size(int c) const { return static_cast<int>(classes_[static_cast<std::size_t>(c)].size()); }

  bool is_abelian() const;
  int element_order(int a) const;

  const std::optional<Factorization>& factorization() const { return extras_.factorization; }
  std::optional<int> permutation_degree() const { return extras_.permutation_degree; }
  const std::vector<std::vector<int>>& permutations() const { return extras_.permutations; }

  std::span<const std::uint16_t> table() const { return table_; }
  std::vector<std::vector<int>> cayley_rows() const;

  bool same_structure(const FiniteGroup& other) const;

 private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  Extras extras_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// True when both pointers denote the same group, either by identity or by an
/// identical Cayley table.
bool same_group(const GroupPtr& a, const GroupPtr& b);

/// A subgroup as a sorted index subset of its parent, together with the
/// subgroup as a group in its own right.
class SubgroupEmbedding {
 public:
  /// Throws Error(InvalidGroup) unless `members` is closed under the product
  /// and contains the identity.
  static SubgroupEmbedding from_members(GroupPtr parent, std::vector<int> members);

  const GroupPtr& parent() const { return parent_; }
  const GroupPtr& as_group() const { return group_; }
  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  int index() const { return parent_->order() / order(); }

  bool contains(int parent_element) const {
    return from_parent_[static_cast<std::size_t>(parent_element)] >= 0;
  }
  int to_parent(int sub_element) const { return members_[static_cast<std::size_t>(sub_element)]; }
  std::optional<int> from_parent(int parent_element) const;

 private:
  GroupPtr parent_;
  GroupPtr group_;
  std::vector<int> members_;
  std::vector<int> from_parent_;
};

/// Closure of `generators` in G.
SubgroupEmbedding subgroup(const GroupPtr& group, const std::vector<int>& generators);
/// Same, with generators given by label (see FiniteGroup::element). Throws
/// Error(InvalidSpec) on an unknown label.
SubgroupEmbedding subgroup(const GroupPtr& group, const std::vector<std::string>& generators);
SubgroupEmbedding trivial_subgroup(const GroupPtr& group);
SubgroupEmbedding whole_group(const GroupPtr& group);

/// X(g) = { s in G : s g s^-1 in H }, sorted. Throws NotInSubgroup if g is not in H.
std::vector<int> x_set(const SubgroupEmbedding& sub, int g);

bool is_normal(const SubgroupEmbedding& sub);
/// sg = gs for every s in G and g in H.
bool centralizes(const SubgroupEmbedding& sub);

/// `inner` re-expressed as a subgroup of `outer.as_group()`. Both must live in
/// the same parent and inner <= outer, otherwise Error(NotInSubgroup).
SubgroupEmbedding relative_to(const SubgroupEmbedding& inner, const SubgroupEmbedding& outer);

/// Plain-text Cayley format: first line the order, then n rows of n
/// zero-based indices.
std::string to_cayley_text(const FiniteGroup& group);
/// Canonical cycle notation of a 0-based permutation, 1-based points, "e"
/// for the identity.
std::string permutation_label(const std::vector<int>& perm);
GroupPtr from_cayley_text(std::string_view text);

// ---------------------------------------------------------------------------
// Group mini-language

struct GroupSpec;
using GroupSpecPtr = std::shared_ptr<const GroupSpec>;

/// How the acting factor of a semidirect product acts on the normal factor.
/// `Inversion` and `Generator` require a cyclic acting group: its generator
/// acts by x -> x^-1 or by the permutation `generator_image`, and g^j by the
/// j-th power. `Table` gives the image of every normal-factor element under
/// every acting element directly: table[k][h].
struct Action {
  enum class Kind { Trivial, Inversion, Generator, Table };
  Kind kind = Kind::Trivial;
  std::vector<int> generator_image;
  std::vector<std::vector<int>> table;
};

struct GroupSpec {
  struct Cyclic { int n; };
  struct Symmetric { int n; };
  struct Alternating { int n; };
  struct Dihedral { int n; };
  struct Product { GroupSpecPtr left, right; };
  struct Semidirect { GroupSpecPtr normal, acting; Action action; };

  std::variant<Cyclic, Symmetric, Alternating, Dihedral, Product, Semidirect> term;
};

GroupSpec cyclic(int n);
GroupSpec symmetric(int n);
GroupSpec alternating(int n);
GroupSpec dihedral(int n);
GroupSpec product(GroupSpec left, GroupSpec right);
GroupSpec semidirect(GroupSpec normal, GroupSpec acting, Action action);

/// Parses "Z2", "Z2xZ2", "S3", "A4", "D4", "semidirect(Z3,Z2,inv)",
/// "semidirect(Z2xZ2,Z3,perm[0,2,3,1])". Throws Error(InvalidSpec).
GroupSpec parse_group_spec(std::string_view text);
std::string to_string(const GroupSpec& spec);

/// Throws InvalidAction if a semidirect action is not a homomorphism into the
/// automorphisms of the normal factor, OrderLimit above kMaxGroupOrder.
GroupPtr build_group(const GroupSpec& spec);
GroupPtr build_group(std::string_view spec_text);

}  // namespace fusionkit
