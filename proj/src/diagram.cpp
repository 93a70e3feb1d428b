#include "fusionkit/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fusionkit/errors.hpp"

namespace fusionkit {

std::int64_t FrobeniusDiagram::multiplicity(int circle, int bullet) const {
  for (const auto& e : edges)
    if (e.circle == circle && e.bullet == bullet) return e.multiplicity;
  return 0;
}

FrobeniusDiagram frobenius_diagram(const PairContext& ctx) {
  const CharacterTable& pis = *ctx.group_table;
  const CharacterTable& taus = *ctx.subgroup_table;
  FrobeniusDiagram d;
  d.index = ctx.sub.index();
  for (std::size_t i = 0; i < pis.size(); ++i) d.circle_nodes.push_back({"π" + std::to_string(i), pis[i].degree()});
  for (std::size_t j = 0; j < taus.size(); ++j) d.bullet_nodes.push_back({"τ" + std::to_string(j), taus[j].degree()});
  for (std::size_t i = 0; i < pis.size(); ++i)
    for (std::size_t j = 0; j < taus.size(); ++j) {
      const auto m = frobenius_multiplicity(ctx.sub, taus[j], pis[i], ctx.tol).multiplicity;
      if (m != 0) d.edges.push_back({static_cast<int>(i), static_cast<int>(j), m});
    }
  return d;
}

bool degree_identity_holds(const FrobeniusDiagram& d, std::string* why) {
  for (std::size_t j = 0; j < d.bullet_nodes.size(); ++j) {
    std::int64_t total = 0;
    for (const auto& e : d.edges)
      if (e.bullet == static_cast<int>(j))
        total += e.multiplicity * d.circle_nodes[static_cast<std::size_t>(e.circle)].degree;
    const std::int64_t want = static_cast<std::int64_t>(d.index) * d.bullet_nodes[j].degree;
    if (total != want) {
      if (why)
        *why = d.bullet_nodes[j].label + ": sum m deg = " + std::to_string(total) + ", index x degree = " +
               std::to_string(want);
      return false;
    }
  }
  return true;
}

std::string emit_dot(const FrobeniusDiagram& d, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 0; i < d.circle_nodes.size(); ++i)
    out << "  c" << i << " [label=\"" << d.circle_nodes[i].label << "\", xlabel=\"" << d.circle_nodes[i].degree
        << "\"];\n";
  for (std::size_t j = 0; j < d.bullet_nodes.size(); ++j)
    out << "  b" << j << " [label=\"" << d.bullet_nodes[j].label << "\", xlabel=\"" << d.bullet_nodes[j].degree
        << "\", style=filled, fillcolor=black, fontcolor=white];\n";
  for (const auto& e : d.edges) {
    out << "  c" << e.circle << " -- b" << e.bullet;
    if (e.multiplicity > 1) out << " [label=\"" << e.multiplicity << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

std::vector<std::vector<std::int64_t>> matrix(const FrobeniusDiagram& d) {
  std::vector<std::vector<std::int64_t>> m(d.circle_nodes.size(), std::vector<std::int64_t>(d.bullet_nodes.size(), 0));
  for (const auto& e : d.edges) m[static_cast<std::size_t>(e.circle)][static_cast<std::size_t>(e.bullet)] = e.multiplicity;
  return m;
}

std::vector<int> identity_perm(std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>> diagrams_isomorphic(const FrobeniusDiagram& a,
                                                                                 const FrobeniusDiagram& b) {
  if (a.circle_nodes.size() != b.circle_nodes.size() || a.bullet_nodes.size() != b.bullet_nodes.size())
    return std::nullopt;
  const auto ma = matrix(a);
  const auto mb = matrix(b);
  auto pc = identity_perm(a.circle_nodes.size());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < pc.size() && ok; ++i)
      ok = a.circle_nodes[i].degree == b.circle_nodes[static_cast<std::size_t>(pc[i])].degree;
    if (!ok) continue;
    auto pb = identity_perm(a.bullet_nodes.size());
    do {
      bool match = true;
      for (std::size_t j = 0; j < pb.size() && match; ++j)
        match = a.bullet_nodes[j].degree == b.bullet_nodes[static_cast<std::size_t>(pb[j])].degree;
      for (std::size_t i = 0; i < pc.size() && match; ++i)
        for (std::size_t j = 0; j < pb.size() && match; ++j)
          match = ma[i][j] == mb[static_cast<std::size_t>(pc[i])][static_cast<std::size_t>(pb[j])];
      if (match) return std::make_pair(pc, pb);
    } while (std::next_permutation(pb.begin(), pb.end()));
  } while (std::next_permutation(pc.begin(), pc.end()));
  return std::nullopt;
}

WeightedGraph underlying_graph(const FrobeniusDiagram& d) {
  WeightedGraph g;
  const int c = static_cast<int>(d.circle_nodes.size());
  g.nodes = c + static_cast<int>(d.bullet_nodes.size());
  for (const auto& e : d.edges) g.edges.push_back({{e.circle, c + e.bullet}, e.multiplicity});
  return g;
}

WeightedGraph path_graph(int nodes) {
  WeightedGraph g;
  g.nodes = nodes;
  for (int i = 0; i + 1 < nodes; ++i) g.edges.push_back({{i, i + 1}, 1});
  return g;
}

WeightedGraph star_graph(int leaves) {
  WeightedGraph g;
  g.nodes = leaves + 1;
  for (int i = 1; i <= leaves; ++i) g.edges.push_back({{0, i}, 1});
  return g;
}

bool graphs_isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.nodes != b.nodes || a.edges.size() != b.edges.size()) return false;
  const auto n = static_cast<std::size_t>(a.nodes);
  auto adjacency = [n](const WeightedGraph& g) {
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (const auto& [e, w] : g.edges) {
      m[static_cast<std::size_t>(e.first)][static_cast<std::size_t>(e.second)] += w;
      m[static_cast<std::size_t>(e.second)][static_cast<std::size_t>(e.first)] += w;
    }
    return m;
  };
  const auto ma = adjacency(a);
  const auto mb = adjacency(b);
  auto p = identity_perm(n);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = ma[i][j] == mb[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(p[j])];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace fusionkit
