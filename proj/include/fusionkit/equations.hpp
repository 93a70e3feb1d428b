#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fusionkit/fusion.hpp"

namespace fusionkit {

/// One line of structure equations: one or more products equal to a common
/// right-hand side, e.g. "ρ0 ρ0 = ρ1 ρ1 = γ0 + 2γ3".
struct StructureEquation {
  std::vector<std::pair<std::string, std::string>> products;
  std::vector<std::pair<std::int64_t, std::string>> rhs;  // (coefficient, name)
};

/// Parses a single equation line. Names are a run of non-digit characters
/// followed by digits, so "γ3ρ0" and "γ3 ρ0" both denote a product. Throws
/// ParseError with column information.
StructureEquation parse_equation(std::string_view line);
/// One equation per non-empty line; '#' starts a comment.
std::vector<StructureEquation> parse_equations(std::string_view text);

/// "γ0 + 2γ3"; "0" for an empty combination.
std::string render_combination(const std::vector<std::pair<std::int64_t, std::string>>& terms);
std::string render_product(const FusionAlgebra& algebra, int i, int j);
std::string render(const StructureEquation& eq);

/// Every product of two non-unit basis elements, one per line as
/// "γ2 γ2 = γ0 + γ1 + γ2", for i <= j; when X_i X_j != X_j X_i both orders
/// are listed.
std::string structure_equations(const FusionAlgebra& algebra);

}  // namespace fusionkit
