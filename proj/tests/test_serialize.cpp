#include "doctest.h"
#include "fusionkit/errors.hpp"
#include "fusionkit/pair_algebra.hpp"
#include "fusionkit/serialize.hpp"

using namespace fusionkit;

namespace {

FusionAlgebra z2_pair() { return pair_algebra(PairContext::make(trivial_subgroup(build_group("Z2")))); }

}  // namespace

TEST_CASE("group round trip") {
  for (const char* spec : {"S4", "D4", "Z2xZ3"}) {
    const auto g = build_group(spec);
    const auto text = serialize(*g);
    CHECK(document_kind(text) == "group");
    const auto back = deserialize_group(text);
    CHECK(back->same_structure(*g));
    CHECK(back->labels() == g->labels());
    CHECK(back->permutation_degree() == g->permutation_degree());
    CHECK(back->factorization().has_value() == g->factorization().has_value());
    CHECK(serialize(*back) == text);
  }
}

TEST_CASE("character table round trip") {
  const auto t = character_table(build_group("S4"));
  const auto back = deserialize_character_table(serialize(*t));
  REQUIRE(back->size() == t->size());
  for (std::size_t i = 0; i < t->size(); ++i) {
    CHECK((*back)[i].degree() == (*t)[i].degree());
    CHECK((*back)[i].function().approx_equal((*t)[i].function(), 1e-8));
  }
}

TEST_CASE("algebra round trip is exact") {
  const auto f = z2_pair();
  const auto text = serialize(f);
  CHECK(text.find("\"schema\": \"fusionkit/1\"") != std::string::npos);
  const auto back = deserialize_algebra(text);
  CHECK(back == f);
  CHECK(serialize(back) == text);
  const auto big = pair_algebra(PairContext::make(subgroup(build_group("S4"), std::vector<std::string>{"(12)"})));
  CHECK(deserialize_algebra(serialize(big)) == big);
}

TEST_CASE("hypergroup and diagram round trips") {
  const auto f = pair_algebra(PairContext::make(subgroup(build_group("S3"), std::vector<std::string>{"(12)"})));
  const auto h = normalize_to_hypergroup(f, dimension_function(f));
  const auto hb = deserialize_hypergroup(serialize(h));
  CHECK(hb.rank() == h.rank());
  CHECK(hb.involutions() == h.involutions());
  for (std::size_t i = 0; i < h.coefficients().size(); ++i)
    CHECK(hb.coefficients()[i] == doctest::Approx(h.coefficients()[i]).epsilon(1e-12));
  for (std::size_t i = 0; i < h.weights().size(); ++i) CHECK(hb.weights()[i] == h.weights()[i]);

  const auto d = frobenius_diagram(PairContext::make(subgroup(build_group("S4"), std::vector<std::string>{"(12)"})));
  CHECK(deserialize_diagram(serialize(d)) == d);
}

TEST_CASE("negative structure constant is a positioned parse error") {
  auto text = serialize(z2_pair());
  const auto pos = text.find("[\n      2,\n      2,\n      0,\n      1\n    ]");
  REQUIRE(pos != std::string::npos);
  text.replace(text.find("1\n    ]", pos), 1, "-1");
  try {
    deserialize_algebra(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("F2") != std::string::npos);
    std::size_t line = 1;
    for (std::size_t i = 0; i < pos; ++i) line += text[i] == '\n';
    CHECK(e.line() == line);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("malformed and foreign documents") {
  try {
    deserialize_algebra("{\n  \"schema\": \"fusionkit/1\",\n  \"kind\": ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 2);
  }
  CHECK_THROWS_AS(deserialize_algebra("[1, 2"), ParseError);
  const auto group_text = serialize(*build_group("Z3"));
  try {
    deserialize_algebra(group_text);
    FAIL("expected SchemaMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SchemaMismatch);
  }
  auto wrong_schema = group_text;
  wrong_schema.replace(wrong_schema.find("fusionkit/1"), 11, "fusionkit/9");
  try {
    deserialize_group(wrong_schema);
    FAIL("expected SchemaMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SchemaMismatch);
  }
  auto fractional = serialize(z2_pair());
  fractional.replace(fractional.rfind("1\n    ]"), 1, "1.5");
  CHECK_THROWS_AS(deserialize_algebra(fractional), ParseError);
}

TEST_CASE("text character table") {
  const auto text = character_table_text(*character_table(build_group("S3")));
  CHECK(text.find("class") != std::string::npos);
  CHECK(text.find("π2") != std::string::npos);
  CHECK(text.find("-0") == std::string::npos);
}
