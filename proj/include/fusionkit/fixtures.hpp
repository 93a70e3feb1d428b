#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/diagram.hpp"
#include "fusionkit/pair_algebra.hpp"

// Reference examples with their printed structure equations, dimension
// values and diagrams, plus the runner that checks computed pair algebras
// against them.

namespace fusionkit {

/// A printed equation line replaced by corrected lines. Accepted only with
/// mechanical evidence: either the printed line contradicts the (corrected)
/// printed dimension values while every corrected line agrees with them, or
/// the printed Circle-by-Circle products admit no associative commutative
/// completion while the corrected ones do.
struct Erratum {
  enum class Evidence { Dimensions, Associativity };
  std::string printed;
  std::vector<std::string> corrected;
  std::string note;
  Evidence evidence = Evidence::Dimensions;
};

/// A printed dimension value replaced by a corrected one. Accepted only when
/// the printed values contradict some equation and the corrected ones satisfy
/// all of them.
struct DimensionErratum {
  std::string name;
  double printed = 0;
  double corrected = 0;
};

struct ReferenceExample {
  std::string id;  // "4.3"
  std::string group;
  std::vector<std::string> generators;
  bool admissible = true;
  std::vector<std::string> equations;
  std::vector<Erratum> errata;
  std::map<std::string, double> dimensions;  // by printed basis name
  std::vector<DimensionErratum> dimension_errata;
  std::optional<FrobeniusDiagram> diagram;
};

const std::vector<ReferenceExample>& reference_examples();
const ReferenceExample& reference_example(const std::string& id);

/// Computed basis index for every printed name, e.g. {"γ3" -> 4}.
using Relabeling = std::map<std::string, int>;

struct ExampleOutcome {
  std::string id;
  bool passed = false;
  std::string detail;
  bool admissible = false;
  int equations_checked = 0;
  int errata_applied = 0;
  int dimension_errata_applied = 0;
  std::optional<Relabeling> relabeling;
  double max_dimension_error = 0;
  bool diagram_matches = false;
};

/// Validates errata, searches for a unit- and tag-preserving relabeling of
/// the computed algebra under which every effective equation holds exactly
/// and the dimension values agree within `dimension_eps`, and compares the
/// diagram up to isomorphism.
ExampleOutcome run_example(const ReferenceExample& example, const Tolerances& tol = {},
                           double dimension_eps = 1e-9);

/// d(a) d(b) = sum c d(x) for every product in the line; names without a
/// value make the line inconsistent.
bool consistent_with_dimensions(const std::string& line, const std::map<std::string, double>& dims,
                                double eps = 1e-9);

/// Builds the Circle block from the γ-by-γ lines, completed by commutativity
/// and the unit law, and checks associativity exactly. Empty when some
/// product of two non-unit Circle elements is missing.
std::optional<bool> circle_block_associative(const std::vector<std::string>& lines);

/// Searches permutations of the non-unit Circle block and of the Bullet
/// block. Printed names are "γi" (Circle i) and "ρj" (Bullet j).
std::vector<Relabeling> equation_relabelings(const FusionAlgebra& algebra, const std::vector<std::string>& lines);

struct CatalogPair {
  std::string name;
  std::string group;
  std::vector<std::string> generators;
  std::vector<std::string> via;  // intermediate subgroup generators, optional
};

/// Pairs of order at most 24 used by the property checks.
const std::vector<CatalogPair>& pair_catalog();
PairContext make_context(const CatalogPair& pair, const Tolerances& tol = {});
std::optional<SubgroupEmbedding> via_subgroup(const CatalogPair& pair, const PairContext& ctx);

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

/// Evaluates the ten acceptance criteria.
std::vector<CriterionResult> acceptance_criteria(const Tolerances& tol = {});
std::string format(const CriterionResult& r);

}  // namespace fusionkit
