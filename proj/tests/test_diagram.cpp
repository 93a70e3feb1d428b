#include "doctest.h"
#include "fusionkit/diagram.hpp"
#include "fusionkit/fixtures.hpp"

using namespace fusionkit;

namespace {

FrobeniusDiagram diagram_of(const char* group, std::vector<std::string> gens) {
  return frobenius_diagram(PairContext::make(subgroup(build_group(group), gens)));
}

}  // namespace

TEST_CASE("trivial subgroup gives the regular representation") {
  for (const char* spec : {"Z2", "Z3", "S3", "S4", "D4"}) {
    const auto d = diagram_of(spec, {});
    REQUIRE(d.bullet_nodes.size() == 1);
    for (std::size_t i = 0; i < d.circle_nodes.size(); ++i)
      CHECK(d.multiplicity(static_cast<int>(i), 0) == d.circle_nodes[i].degree);
  }
}

TEST_CASE("whole group gives a perfect matching") {
  for (const char* spec : {"S3", "A4", "S4"}) {
    const auto g = build_group(spec);
    const auto d = frobenius_diagram(PairContext::make(whole_group(g)));
    CHECK(d.edges.size() == d.circle_nodes.size());
    for (const auto& e : d.edges) {
      CHECK(e.circle == e.bullet);
      CHECK(e.multiplicity == 1);
    }
  }
}

TEST_CASE("named shapes") {
  CHECK(graphs_isomorphic(underlying_graph(diagram_of("Z2", {})), path_graph(3)));
  CHECK(graphs_isomorphic(underlying_graph(diagram_of("Z3", {})), star_graph(3)));
  CHECK(graphs_isomorphic(underlying_graph(diagram_of("S3", {"(12)"})), path_graph(5)));
  CHECK_FALSE(graphs_isomorphic(underlying_graph(diagram_of("Z3", {})), path_graph(4)));
  CHECK_FALSE(graphs_isomorphic(path_graph(4), star_graph(3)));
}

TEST_CASE("A4 over Z3: the degree-3 node meets every bullet") {
  const auto d = diagram_of("A4", {"(123)"});
  REQUIRE(d.circle_nodes.size() == 4);
  CHECK(d.circle_nodes[3].degree == 3);
  for (int j = 0; j < 3; ++j) CHECK(d.multiplicity(3, j) == 1);
  CHECK(d.edges.size() == 6);
}

TEST_CASE("degree identity holds over the catalog and catches tampering") {
  for (const auto& p : pair_catalog()) {
    auto d = frobenius_diagram(make_context(p));
    std::string why;
    CHECK_MESSAGE(degree_identity_holds(d, &why), (p.name + " " + why));
    d.edges.front().multiplicity += 1;
    CHECK_FALSE(degree_identity_holds(d, &why));
    CHECK_FALSE(why.empty());
  }
}

TEST_CASE("DOT output") {
  const auto d = diagram_of("S4", {"(12)"});
  const auto dot = emit_dot(d);
  CHECK(dot == emit_dot(diagram_of("S4", {"(12)"})));
  CHECK(dot.rfind("graph frobenius {", 0) == 0);
  CHECK(dot.find("style=filled, fillcolor=black") != std::string::npos);
  CHECK(dot.find("[label=\"2\"]") != std::string::npos);
  int edges = 0;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) ++edges;
  CHECK(edges == static_cast<int>(d.edges.size()));
  CHECK(emit_dot(diagram_of("Z2", {}), "z2").rfind("graph z2 {", 0) == 0);
}

TEST_CASE("diagram isomorphism respects degrees") {
  const auto a = diagram_of("Z4", {"2"});
  const auto b = diagram_of("Z2xZ2", {"(1,0)"});
  CHECK(diagrams_isomorphic(a, b));
  CHECK_FALSE(diagrams_isomorphic(diagram_of("S3", {"(12)"}), diagram_of("Z4", {"2"})));
  auto c = diagram_of("S3", {"(12)"});
  auto e = c;
  e.circle_nodes[2].degree = 3;
  CHECK_FALSE(diagrams_isomorphic(c, e));
}
