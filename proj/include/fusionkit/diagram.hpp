#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fusionkit/pair_algebra.hpp"

namespace fusionkit {

struct DiagramNode {
  std::string label;
  int degree = 1;

  bool operator==(const DiagramNode&) const = default;
};

struct DiagramEdge {
  int circle = 0;
  int bullet = 0;
  std::int64_t multiplicity = 1;

  bool operator==(const DiagramEdge&) const = default;
};

/// Bipartite multiplicity graph between the irreducibles of G (circle nodes)
/// and of G0 (bullet nodes). Edges are sorted by (circle, bullet).
struct FrobeniusDiagram {
  std::vector<DiagramNode> circle_nodes;
  std::vector<DiagramNode> bullet_nodes;
  std::vector<DiagramEdge> edges;
  int index = 1;  // [G:G0]

  std::int64_t multiplicity(int circle, int bullet) const;
  bool operator==(const FrobeniusDiagram&) const = default;
};

/// Edge (pi, tau) with multiplicity [ind tau : pi] wherever it is nonzero.
FrobeniusDiagram frobenius_diagram(const PairContext& ctx);

/// sum_pi m(pi, tau) deg(pi) = [G:G0] deg(tau) for every bullet node. On
/// failure `why` names the first offending node.
bool degree_identity_holds(const FrobeniusDiagram& d, std::string* why = nullptr);

/// Deterministic DOT text. Bullet nodes are filled, multiplicities above one
/// become edge labels.
std::string emit_dot(const FrobeniusDiagram& d, std::string_view name = "frobenius");

/// Node maps (circle, bullet) preserving sides, node degrees and edge
/// multiplicities.
std::optional<std::pair<std::vector<int>, std::vector<int>>> diagrams_isomorphic(const FrobeniusDiagram& a,
                                                                                 const FrobeniusDiagram& b);

/// Undirected graph on 0..n-1 with edge weights.
struct WeightedGraph {
  int nodes = 0;
  std::vector<std::pair<std::pair<int, int>, std::int64_t>> edges;
};

/// The diagram forgetting sides and node degrees: circle nodes first.
WeightedGraph underlying_graph(const FrobeniusDiagram& d);
WeightedGraph path_graph(int nodes);
WeightedGraph star_graph(int leaves);
/// Brute force over node permutations; intended for small graphs.
bool graphs_isomorphic(const WeightedGraph& a, const WeightedGraph& b);

}  // namespace fusionkit
