#pragma once

#include <string>
#include <string_view>

#include "fusionkit/character.hpp"
#include "fusionkit/diagram.hpp"
#include "fusionkit/fusion.hpp"

// JSON interchange, schema "fusionkit/1". Every document is an object with
// "schema" and "kind" fields; kinds are group, character_table,
// fusion_algebra, hypergroup and frobenius_diagram. Complex numbers are
// [re, im] pairs; algebra tensors are sparse [i, j, k, a] entries.

namespace fusionkit {

inline constexpr std::string_view kSchema = "fusionkit/1";

std::string serialize(const FiniteGroup& group);
std::string serialize(const CharacterTable& table);
std::string serialize(const FusionAlgebra& algebra);
std::string serialize(const Hypergroup& hypergroup);
std::string serialize(const FrobeniusDiagram& diagram);

/// The "kind" field. Throws ParseError on malformed JSON, SchemaMismatch on
/// a missing or foreign schema.
std::string document_kind(std::string_view text);

// Each throws ParseError (with line and column) on malformed JSON or values
// violating the entity's invariants, and SchemaMismatch on a wrong schema,
// kind or field type.
GroupPtr deserialize_group(std::string_view text);
CharacterTablePtr deserialize_character_table(std::string_view text);
FusionAlgebra deserialize_algebra(std::string_view text);
Hypergroup deserialize_hypergroup(std::string_view text);
FrobeniusDiagram deserialize_diagram(std::string_view text);

/// Plain-text table: a header row of class sizes and representatives, then
/// one row per irreducible.
std::string character_table_text(const CharacterTable& table);

}  // namespace fusionkit
