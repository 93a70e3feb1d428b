#include "fusionkit/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "fusionkit/equations.hpp"
#include "fusionkit/errors.hpp"

namespace fusionkit {

namespace {

FrobeniusDiagram diagram(std::vector<int> circle_degrees, std::vector<int> bullet_degrees,
                         std::vector<DiagramEdge> edges, int index) {
  FrobeniusDiagram d;
  for (std::size_t i = 0; i < circle_degrees.size(); ++i)
    d.circle_nodes.push_back({"π" + std::to_string(i), circle_degrees[i]});
  for (std::size_t j = 0; j < bullet_degrees.size(); ++j)
    d.bullet_nodes.push_back({"τ" + std::to_string(j), bullet_degrees[j]});
  std::sort(edges.begin(), edges.end(), [](const DiagramEdge& a, const DiagramEdge& b) {
    return std::pair(a.circle, a.bullet) < std::pair(b.circle, b.bullet);
  });
  d.edges = std::move(edges);
  d.index = index;
  return d;
}

std::map<std::string, double> dims(std::vector<double> circle, std::vector<double> bullet) {
  std::map<std::string, double> m;
  for (std::size_t i = 0; i < circle.size(); ++i) m["γ" + std::to_string(i)] = circle[i];
  for (std::size_t j = 0; j < bullet.size(); ++j) m["ρ" + std::to_string(j)] = bullet[j];
  return m;
}

const std::vector<std::string> kZ4Bullet = {
    "ρ0 ρ0 = ρ1 ρ1 = γ0 + γ2", "ρ0 ρ1 = ρ1 ρ0 = γ1 + γ3", "γ0 ρ0 = ρ0", "γ1 ρ0 = ρ1",
    "γ2 ρ0 = ρ0", "γ3 ρ0 = ρ1", "γ0 ρ1 = ρ1", "γ1 ρ1 = ρ0", "γ2 ρ1 = ρ1", "γ3 ρ1 = ρ0",
};

const std::vector<std::string> kS4Circle = {
    "γ1 γ1 = γ0",
    "γ2 γ2 = γ0 + γ1 + γ2",
    "γ3 γ3 = γ4 γ4 = γ0 + γ2 + γ3 + γ4",
    "γ1 γ2 = γ2",
    "γ1 γ3 = γ4",
    "γ1 γ4 = γ3",
    "γ2 γ3 = γ2 γ4 = γ3 + γ4",
    "γ3 γ4 = γ1 + γ2 + γ3 + γ4",
};

std::vector<ReferenceExample> build_examples() {
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  std::vector<ReferenceExample> out;

  {
    ReferenceExample e;
    e.id = "Z2>1";
    e.group = "Z2";
    e.equations = {"γ1 γ1 = γ0", "ρ0 ρ0 = γ0 + γ1", "γ1 ρ0 = ρ0"};
    e.dimensions = dims({1, 1}, {r2});
    e.diagram = diagram({1, 1}, {1}, {{0, 0, 1}, {1, 0, 1}}, 2);
    out.push_back(std::move(e));
  }
  {
    ReferenceExample e;
    e.id = "Z3>1";
    e.group = "Z3";
    e.equations = {"γ1 γ1 = γ2", "γ2 γ2 = γ1", "γ1 γ2 = γ0", "ρ0 ρ0 = γ0 + γ1 + γ2", "γ1 ρ0 = ρ0", "γ2 ρ0 = ρ0"};
    e.dimensions = dims({1, 1, 1}, {r3});
    e.diagram = diagram({1, 1, 1}, {1}, {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}}, 3);
    out.push_back(std::move(e));
  }
  {
    ReferenceExample e;
    e.id = "S3>Z2";
    e.group = "S3";
    e.generators = {"(12)"};
    e.equations = {"γ1 γ1 = γ0",          "γ2 γ2 = γ0 + γ1 + γ2", "γ1 γ2 = γ2",
                   "ρ0 ρ0 = ρ1 ρ1 = γ0 + γ2", "ρ0 ρ1 = ρ1 ρ0 = γ1 + γ2", "γ0 ρ0 = ρ0",
                   "γ1 ρ0 = ρ1",          "γ2 ρ0 = ρ0 + ρ1",      "γ0 ρ1 = ρ1",
                   "γ1 ρ1 = ρ0",          "γ2 ρ1 = ρ0 + ρ1"};
    e.dimensions = dims({1, 1, 2}, {r3, r3});
    e.diagram = diagram({1, 1, 2}, {1, 1}, {{0, 0, 1}, {2, 0, 1}, {2, 1, 1}, {1, 1, 1}}, 3);
    out.push_back(std::move(e));
  }
  {
    ReferenceExample e;
    e.id = "Z4>Z2";
    e.group = "Z4";
    e.generators = {"2"};
    e.equations = {"γ1 γ1 = γ2", "γ2 γ2 = γ0", "γ3 γ3 = γ1", "γ1 γ2 = γ3", "γ1 γ3 = γ0", "γ2 γ3 = γ1"};
    e.equations.insert(e.equations.end(), kZ4Bullet.begin(), kZ4Bullet.end());
    e.errata = {{"γ3 γ3 = γ1", {"γ3 γ3 = γ2"}, "forced by γ1 γ1 = γ2, γ2 γ2 = γ0, γ1 γ3 = γ0",
                 Erratum::Evidence::Associativity}};
    e.dimensions = dims({1, 1, 1, 1}, {r2, r2});
    e.diagram = diagram({1, 1, 1, 1}, {1, 1}, {{0, 0, 1}, {2, 0, 1}, {1, 1, 1}, {3, 1, 1}}, 2);
    out.push_back(std::move(e));
  }
  {
    ReferenceExample e;
    e.id = "Z2xZ2>Z2";
    e.group = "Z2xZ2";
    e.generators = {"(1,0)"};
    e.equations = {"γ1 γ1 = γ0", "γ2 γ2 = γ0", "γ3 γ3 = γ0", "γ1 γ2 = γ3", "γ1 γ3 = γ2", "γ2 γ3 = γ1"};
    e.equations.insert(e.equations.end(), kZ4Bullet.begin(), kZ4Bullet.end());
    e.dimensions = dims({1, 1, 1, 1}, {r2, r2});
    e.diagram = diagram({1, 1, 1, 1}, {1, 1}, {{0, 0, 1}, {2, 0, 1}, {1, 1, 1}, {3, 1, 1}}, 2);
    out.push_back(std::move(e));
  }
  {
    ReferenceExample e;
    e.id = "S3>Z3";
    e.group = "S3";
    e.generators = {"(123)"};
    e.admissible = false;
    e.diagram = diagram({1, 1, 2}, {1, 1, 1}, {{0, 0, 1}, {1, 0, 1}, {2, 1, 1}, {2, 2, 1}}, 2);
    out.push_back(std::move(e));
  }
  {
    ReferenceExample e;
    e.id = "D4>Z2";
    e.group = "D4";
    e.generators = {"s"};
    e.equations = {"γ1 γ1 = γ0",
                   "γ2 γ2 = γ0 + γ1 + γ3 + γ4",
                   "γ3 γ3 = γ0",
                   "γ4 γ4 = γ0",
                   "γ1 γ2 = γ2",
                   "γ1 γ3 = γ4",
                   "γ1 γ4 = γ3",
                   "γ2 γ3 = γ2",
                   "γ2 γ4 = γ2",
                   "γ3 γ4 = γ1",
                   "ρ0 ρ0 = ρ1 ρ1 = γ0 + γ1 + γ2",
                   "ρ0 ρ1 = γ2 + γ3 + γ4",
                   "γ1 ρ0 = ρ0",
                   "γ2 ρ0 = ρ0 + ρ1",
                   "γ3 ρ0 = ρ1",
                   "γ4 ρ0 = ρ1",
                   "γ1 ρ1 = ρ1",
                   "γ2 ρ1 = ρ0 + ρ1",
                   "γ3 ρ1 = ρ0",
                   "γ4 ρ1 = ρ0"};
    e.dimensions = dims({1, 1, 1, 1, 2}, {2, 2});
    e.dimension_errata = {{"γ2", 1, 2}, {"γ4", 2, 1}};
    e.diagram = diagram({1, 1, 1, 1, 2}, {1, 1},
                        {{0, 0, 1}, {1, 0, 1}, {4, 0, 1}, {4, 1, 1}, {2, 1, 1}, {3, 1, 1}}, 4);
    out.push_back(std::move(e));
  }
  {
    ReferenceExample e;
    e.id = "A4>Z3";
    e.group = "A4";
    e.generators = {"(123)"};
    e.equations = {"γ1 γ1 = γ2",
                   "γ2 γ2 = γ1",
                   "γ3 γ3 = γ0 + γ1 + γ2 + 2γ3",
                   "γ1 γ2 = γ0",
                   "γ1 γ3 = γ3",
                   "γ2 γ3 = γ3",
                   "ρ0 ρ0 = ρ1 ρ2 = γ0 + γ3",
                   "ρ0 ρ1 = γ1 + γ3",
                   "ρ0 ρ2 = γ2 + γ3",
                   "γ1 ρ0 = ρ1",
                   "γ2 ρ0 = ρ2",
                   "γ1 ρ1 = ρ2",
                   "γ2 ρ1 = ρ0",
                   "γ3 ρ0 = γ3 ρ1 = γ3 ρ2 = ρ0 + ρ1 + ρ2"};
    e.dimensions = dims({1, 1, 1, 3}, {2, 2, 2});
    e.diagram = diagram({1, 1, 1, 3}, {1, 1, 1}, {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 0, 1}, {3, 1, 1}, {3, 2, 1}},
                        4);
    out.push_back(std::move(e));
  }
  {
    ReferenceExample e;
    e.id = "S4>Z2";
    e.group = "S4";
    e.generators = {"(12)"};
    e.equations = kS4Circle;
    const std::vector<std::string> bullet = {
        "ρ0 ρ0 = ρ1 ρ1 = γ0 + γ2 + γ3 + γ4",
        "ρ0 ρ1 = ρ1 ρ0 = γ1 + γ2 + γ3 + γ4",
        "γ0 ρ0 = ρ0",
        "γ1 ρ0 = ρ1",
        "γ2 ρ0 = ρ0 + ρ1",
        "γ3 ρ0 = ρ0 + ρ1",
        "γ4 ρ0 = ρ0 + ρ1",
        "γ0 ρ1 = ρ1",
        "γ1 ρ1 = ρ0",
        "γ2 ρ1 = ρ0 + ρ1",
        "γ3 ρ1 = ρ0 + ρ1",
        "γ4 ρ1 = ρ0 + ρ1",
    };
    e.equations.insert(e.equations.end(), bullet.begin(), bullet.end());
    e.errata = {
        {"ρ0 ρ0 = ρ1 ρ1 = γ0 + γ2 + γ3 + γ4", {"ρ0 ρ0 = ρ1 ρ1 = γ0 + γ2 + 2γ3 + γ4"}, "missing multiplicity 2"},
        {"ρ0 ρ1 = ρ1 ρ0 = γ1 + γ2 + γ3 + γ4", {"ρ0 ρ1 = ρ1 ρ0 = γ1 + γ2 + γ3 + 2γ4"}, "missing multiplicity 2"},
        {"γ3 ρ0 = ρ0 + ρ1", {"γ3 ρ0 = 2ρ0 + ρ1"}, "missing multiplicity 2"},
        {"γ4 ρ0 = ρ0 + ρ1", {"γ4 ρ0 = ρ0 + 2ρ1"}, "missing multiplicity 2"},
        {"γ3 ρ1 = ρ0 + ρ1", {"γ3 ρ1 = ρ0 + 2ρ1"}, "missing multiplicity 2"},
        {"γ4 ρ1 = ρ0 + ρ1", {"γ4 ρ1 = 2ρ0 + ρ1"}, "missing multiplicity 2"},
    };
    e.dimensions = dims({1, 1, 2, 3, 3}, {2 * r3, 2 * r3});
    e.diagram = diagram({1, 1, 2, 3, 3}, {1, 1},
                        {{0, 0, 1}, {3, 0, 2}, {2, 0, 1}, {4, 0, 1}, {3, 1, 1}, {2, 1, 1}, {1, 1, 1}, {4, 1, 2}}, 12);
    out.push_back(std::move(e));
  }
  {
    ReferenceExample e;
    e.id = "S4>S3";
    e.group = "S4";
    e.generators = {"(12)", "(123)"};
    e.equations = kS4Circle;
    const std::vector<std::string> bullet = {
        "ρ0 ρ0 = ρ1 ρ1 = γ0 + γ3",
        "ρ2 ρ2 = γ0 + γ1 + γ2 + γ3 + γ4",
        "ρ1 ρ2 = γ2 + γ3 + γ4",
        "γ0 ρ0 = ρ0",
        "γ1 ρ0 = ρ1",
        "γ2 ρ0 = ρ2",
        "γ3 ρ0 = ρ0 + ρ2",
        "γ4 ρ0 = ρ1 + ρ2",
        "γ0 ρ1 = ρ1",
        "γ1 ρ1 = ρ0",
        "γ2 ρ1 = ρ2",
        "γ3 ρ1 = ρ1 + ρ2",
        "γ4 ρ1 = ρ0 + ρ2",
        "γ0 ρ2 = ρ2",
        "γ1 ρ2 = ρ2",
        "γ2 ρ2 = ρ0 + ρ1 + ρ2",
        "γ3 ρ2 = γ4 ρ0 = ρ0 + ρ1 + ρ2",
    };
    e.equations.insert(e.equations.end(), bullet.begin(), bullet.end());
    e.errata = {
        {"ρ2 ρ2 = γ0 + γ1 + γ2 + γ3 + γ4", {"ρ2 ρ2 = γ0 + γ1 + γ2 + 2γ3 + 2γ4"}, "missing multiplicity 2"},
        {"γ3 ρ2 = γ4 ρ0 = ρ0 + ρ1 + ρ2",
         {"γ3 ρ2 = ρ0 + ρ1 + 2ρ2", "γ4 ρ0 = ρ1 + ρ2"},
         "self-contradictory line excluded; computed values recorded"},
    };
    e.dimensions = dims({1, 1, 2, 3, 3}, {2, 2, 4});
    e.diagram = diagram({1, 1, 2, 3, 3}, {1, 1, 2},
                        {{0, 0, 1}, {3, 0, 1}, {3, 2, 1}, {2, 2, 1}, {4, 1, 1}, {1, 1, 1}, {4, 2, 1}}, 4);
    out.push_back(std::move(e));
  }
  return out;
}

struct Name {
  BasisLabel::Tag tag;
  int index;
};

Name parse_name(const std::string& name) {
  static const std::string circle = "γ";
  static const std::string bullet = "ρ";
  auto digits = [&](std::size_t from) {
    if (from >= name.size()) throw Error(ErrorKind::InvalidSpec, "basis name without index: " + name);
    return std::stoi(name.substr(from));
  };
  if (name.rfind(circle, 0) == 0) return {BasisLabel::Tag::Circle, digits(circle.size())};
  if (name.rfind(bullet, 0) == 0) return {BasisLabel::Tag::Bullet, digits(bullet.size())};
  throw Error(ErrorKind::InvalidSpec, "basis name must start with γ or ρ: " + name);
}

// A parsed line with names resolved to (tag, index).
struct IndexedEquation {
  std::vector<std::pair<Name, Name>> products;
  std::vector<std::pair<std::int64_t, Name>> rhs;
};

IndexedEquation index_equation(const StructureEquation& eq) {
  IndexedEquation out;
  for (const auto& [a, b] : eq.products) out.products.emplace_back(parse_name(a), parse_name(b));
  for (const auto& [c, n] : eq.rhs) out.rhs.emplace_back(c, parse_name(n));
  return out;
}

std::vector<std::string> effective_lines(const ReferenceExample& e) {
  std::vector<std::string> out;
  for (const auto& line : e.equations) {
    const auto it = std::find_if(e.errata.begin(), e.errata.end(), [&](const Erratum& x) { return x.printed == line; });
    if (it == e.errata.end()) out.push_back(line);
    else out.insert(out.end(), it->corrected.begin(), it->corrected.end());
  }
  return out;
}

std::string fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

const std::vector<ReferenceExample>& reference_examples() {
  static const std::vector<ReferenceExample> examples = build_examples();
  return examples;
}

const ReferenceExample& reference_example(const std::string& id) {
  for (const auto& e : reference_examples())
    if (e.id == id) return e;
  throw Error(ErrorKind::InvalidSpec, "no reference example " + id);
}

bool consistent_with_dimensions(const std::string& line, const std::map<std::string, double>& d, double eps) {
  const auto eq = parse_equation(line);
  auto value = [&](const std::string& n) -> std::optional<double> {
    const auto it = d.find(n);
    if (it == d.end()) return std::nullopt;
    return it->second;
  };
  double rhs = 0;
  for (const auto& [c, n] : eq.rhs) {
    const auto v = value(n);
    if (!v) return false;
    rhs += static_cast<double>(c) * *v;
  }
  for (const auto& [a, b] : eq.products) {
    const auto va = value(a);
    const auto vb = value(b);
    if (!va || !vb) return false;
    if (std::abs(*va * *vb - rhs) > eps * std::max(1.0, rhs)) return false;
  }
  return true;
}

std::optional<bool> circle_block_associative(const std::vector<std::string>& lines) {
  std::map<std::pair<int, int>, std::map<int, std::int64_t>> table;
  int p = 0;
  for (const auto& line : lines) {
    const auto eq = index_equation(parse_equation(line));
    const bool circle_rhs = std::all_of(eq.rhs.begin(), eq.rhs.end(),
                                        [](const auto& t) { return t.second.tag == BasisLabel::Tag::Circle; });
    for (const auto& [a, b] : eq.products) {
      if (a.tag != BasisLabel::Tag::Circle || b.tag != BasisLabel::Tag::Circle) continue;
      if (!circle_rhs) return false;
      std::map<int, std::int64_t> rhs;
      for (const auto& [c, n] : eq.rhs) {
        rhs[n.index] += c;
        p = std::max(p, n.index + 1);
      }
      p = std::max({p, a.index + 1, b.index + 1});
      for (const auto& key : {std::pair(a.index, b.index), std::pair(b.index, a.index)}) {
        const auto [it, fresh] = table.emplace(key, rhs);
        if (!fresh && it->second != rhs) return false;
      }
    }
  }
  for (int i = 0; i < p; ++i) {
    table[{0, i}] = {{i, 1}};
    table[{i, 0}] = {{i, 1}};
  }
  for (int i = 1; i < p; ++i)
    for (int j = 1; j < p; ++j)
      if (!table.count({i, j})) return std::nullopt;
  // x * (sum_k c_k X_k) and (sum_k c_k X_k) * x as coefficient maps.
  auto right = [&](const std::map<int, std::int64_t>& v, int x) {
    std::map<int, std::int64_t> out;
    for (auto [k, c] : v)
      for (auto [l, a] : table.at({k, x})) out[l] += c * a;
    return out;
  };
  auto left = [&](int x, const std::map<int, std::int64_t>& v) {
    std::map<int, std::int64_t> out;
    for (auto [k, c] : v)
      for (auto [l, a] : table.at({x, k})) out[l] += c * a;
    return out;
  };
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k)
        if (right(table.at({i, j}), k) != left(i, table.at({j, k}))) return false;
  return true;
}

std::vector<Relabeling> equation_relabelings(const FusionAlgebra& algebra, const std::vector<std::string>& lines) {
  int p = 0;
  int q = 0;
  for (const auto& b : algebra.basis()) {
    if (b.tag == BasisLabel::Tag::Circle) ++p;
    else if (b.tag == BasisLabel::Tag::Bullet) ++q;
  }
  if (p + q != algebra.rank())
    throw Error(ErrorKind::InvalidSpec, "relabeling needs an algebra with Circle and Bullet tags only");
  std::vector<IndexedEquation> eqs;
  for (const auto& line : lines) {
    eqs.push_back(index_equation(parse_equation(line)));
    auto in_range = [&](const Name& n) {
      return n.tag == BasisLabel::Tag::Circle ? n.index < p : n.index < q;
    };
    for (const auto& [a, b] : eqs.back().products)
      if (!in_range(a) || !in_range(b)) return {};
    for (const auto& t : eqs.back().rhs)
      if (!in_range(t.second)) return {};
  }

  std::vector<int> circle(static_cast<std::size_t>(p));
  std::iota(circle.begin(), circle.end(), 0);
  std::vector<Relabeling> out;
  do {
    std::vector<int> bullet(static_cast<std::size_t>(q));
    std::iota(bullet.begin(), bullet.end(), p);
    do {
      auto resolve = [&](const Name& n) {
        return n.tag == BasisLabel::Tag::Circle ? circle[static_cast<std::size_t>(n.index)]
                                                : bullet[static_cast<std::size_t>(n.index)];
      };
      bool ok = true;
      for (const auto& eq : eqs) {
        std::map<int, std::int64_t> want;
        for (const auto& [c, n] : eq.rhs) want[resolve(n)] += c;
        FusionAlgebra::Product expected;
        for (auto [k, c] : want)
          if (c != 0) expected.emplace_back(k, c);
        for (const auto& [a, b] : eq.products)
          ok = ok && algebra.product(resolve(a), resolve(b)) == expected;
        if (!ok) break;
      }
      if (ok) {
        Relabeling r;
        for (int i = 0; i < p; ++i) r["γ" + std::to_string(i)] = circle[static_cast<std::size_t>(i)];
        for (int j = 0; j < q; ++j) r["ρ" + std::to_string(j)] = bullet[static_cast<std::size_t>(j)];
        out.push_back(std::move(r));
      }
    } while (std::next_permutation(bullet.begin(), bullet.end()));
  } while (p > 1 && std::next_permutation(circle.begin() + 1, circle.end()));
  return out;
}

ExampleOutcome run_example(const ReferenceExample& e, const Tolerances& tol, double dimension_eps) {
  ExampleOutcome out;
  out.id = e.id;
  const auto group = build_group(e.group);
  const auto ctx = PairContext::make(subgroup(group, e.generators), tol);
  const auto result = build_pair_algebra(ctx);
  out.admissible = result.admissible;

  const auto computed_diagram = frobenius_diagram(ctx);
  std::string why;
  out.diagram_matches = (!e.diagram || diagrams_isomorphic(computed_diagram, *e.diagram)) &&
                        degree_identity_holds(computed_diagram, &why);
  if (!out.diagram_matches && why.empty()) why = "diagram differs from the reference";

  if (!e.admissible) {
    const auto rel = verify_associativity(ctx);
    const bool a123 = rel.relations[0].passed && rel.relations[1].passed && rel.relations[2].passed;
    out.passed = !result.admissible && result.witness && a123 && !rel.a4().passed && out.diagram_matches;
    out.detail = result.admissible ? "expected a refusal, pair is admissible"
                 : result.witness  ? "refused: " + describe(ctx, *result.witness)
                                   : "refused without witness";
    if (!out.diagram_matches) out.detail += "; " + why;
    return out;
  }
  if (!result.admissible) {
    out.detail = "pair refused: " + (result.witness ? describe(ctx, *result.witness) : std::string("no witness"));
    return out;
  }

  const auto lines = effective_lines(e);
  std::vector<std::string> problems;

  auto d_map = e.dimensions;
  if (!e.dimension_errata.empty()) {
    for (const auto& de : e.dimension_errata) {
      if (std::abs(d_map[de.name] - de.printed) > 1e-12) problems.push_back("dimension erratum for " + de.name + " does not match the printed value");
      d_map[de.name] = de.corrected;
    }
    const bool printed_contradicts =
        std::any_of(lines.begin(), lines.end(), [&](const std::string& l) { return !consistent_with_dimensions(l, e.dimensions); });
    const bool corrected_fits =
        std::all_of(lines.begin(), lines.end(), [&](const std::string& l) { return consistent_with_dimensions(l, d_map); });
    if (!printed_contradicts) problems.push_back("dimension erratum rejected: printed values already fit the equations");
    if (!corrected_fits) problems.push_back("dimension erratum rejected: corrected values do not fit the equations");
    out.dimension_errata_applied = static_cast<int>(e.dimension_errata.size());
  }
  for (const auto& x : e.errata) {
    if (std::find(e.equations.begin(), e.equations.end(), x.printed) == e.equations.end())
      problems.push_back("erratum for unknown line '" + x.printed + "'");
    if (x.evidence == Erratum::Evidence::Dimensions) {
      if (consistent_with_dimensions(x.printed, d_map))
        problems.push_back("erratum rejected, line fits the dimension values: " + x.printed);
      for (const auto& c : x.corrected)
        if (!consistent_with_dimensions(c, d_map)) problems.push_back("correction does not fit the dimension values: " + c);
    } else {
      // The effective lines with this one erratum undone.
      std::vector<std::string> printed;
      for (const auto& l : lines)
        if (std::find(x.corrected.begin(), x.corrected.end(), l) == x.corrected.end()) printed.push_back(l);
      printed.push_back(x.printed);
      if (circle_block_associative(printed) != false)
        problems.push_back("erratum rejected, printed products are associative: " + x.printed);
      if (circle_block_associative(lines) != true)
        problems.push_back("correction does not give an associative Circle block: " + x.printed);
    }
  }
  out.errata_applied = static_cast<int>(e.errata.size());

  for (const auto& l : lines) out.equations_checked += static_cast<int>(parse_equation(l).products.size());

  const FusionAlgebra& algebra = *result.algebra;
  const auto relabelings = equation_relabelings(algebra, lines);
  if (relabelings.empty()) {
    problems.push_back("no relabeling satisfies all equations");
  } else {
    const auto d = dimension_function(algebra, tol);
    double best = INFINITY;
    for (const auto& r : relabelings) {
      double err = 0;
      for (const auto& [name, value] : d_map) {
        const auto it = r.find(name);
        err = it == r.end() ? INFINITY : std::max(err, std::abs(d[it->second] - value));
      }
      if (err < best) {
        best = err;
        out.relabeling = r;
      }
    }
    out.max_dimension_error = best;
    if (!(best <= dimension_eps)) problems.push_back("dimension values differ by " + fixed(best));
  }
  if (!out.diagram_matches) problems.push_back(why);

  out.passed = problems.empty();
  std::ostringstream detail;
  detail << out.equations_checked << " products matched";
  if (out.errata_applied) detail << ", " << out.errata_applied << " errata";
  if (out.dimension_errata_applied) detail << ", " << out.dimension_errata_applied << " dimension errata";
  for (const auto& p : problems) detail << "; " << p;
  out.detail = detail.str();
  return out;
}

const std::vector<CatalogPair>& pair_catalog() {
  static const std::vector<CatalogPair> catalog = {
      {"Z2>1", "Z2", {}, {}},
      {"Z3>1", "Z3", {}, {}},
      {"S3>Z2", "S3", {"(12)"}, {}},
      {"Z4>Z2", "Z4", {"2"}, {}},
      {"Z2xZ2>Z2", "Z2xZ2", {"(1,0)"}, {}},
      {"S3>Z3", "S3", {"(123)"}, {}},
      {"D4>Z2", "D4", {"s"}, {}},
      {"A4>Z3", "A4", {"(123)"}, {}},
      {"S4>Z2", "S4", {"(12)"}, {"(12)", "(123)"}},
      {"S4>S3", "S4", {"(12)", "(123)"}, {}},
      {"D4>Z4", "D4", {"r"}, {}},
      {"A4>V4", "A4", {"(12)(34)", "(13)(24)"}, {}},
      {"S4>Z4", "S4", {"(1234)"}, {}},
      {"S4>A4", "S4", {"(123)", "(12)(34)"}, {}},
      {"S4>V4", "S4", {"(12)(34)", "(13)(24)"}, {}},
      {"S4>D4", "S4", {"(1234)", "(13)"}, {}},
      {"D4>Z2c", "D4", {"r2"}, {}},
      {"S3>S3", "S3", {"(12)", "(123)"}, {}},
      {"S3>1", "S3", {}, {}},
      {"A4>1", "A4", {}, {}},
      {"A4>A4", "A4", {"(123)", "(12)(34)"}, {}},
      {"D6>Z2", "D6", {"s"}, {}},
      {"D6>Z3", "D6", {"r2"}, {}},
      {"Z6>Z3", "Z6", {"2"}, {}},
      {"Z3xS3>S3", "Z3xS3", {"(0,(12))", "(0,(123))"}, {}},
      {"semidirect(Z3,Z4,inv)>Z4", "semidirect(Z3,Z4,inv)", {"(0,1)"}, {}},
  };
  return catalog;
}

PairContext make_context(const CatalogPair& pair, const Tolerances& tol) {
  return PairContext::make(subgroup(build_group(pair.group), pair.generators), tol);
}

std::optional<SubgroupEmbedding> via_subgroup(const CatalogPair& pair, const PairContext& ctx) {
  if (pair.via.empty()) return std::nullopt;
  return subgroup(ctx.sub.parent(), pair.via);
}

namespace {

struct Contexts {
  std::vector<CatalogPair> pairs;
  std::vector<PairContext> ctx;
};

Contexts catalog_contexts(const Tolerances& tol) {
  Contexts c;
  for (const auto& p : pair_catalog()) {
    c.pairs.push_back(p);
    c.ctx.push_back(make_context(p, tol));
  }
  return c;
}

CriterionResult regression(const std::vector<ExampleOutcome>& outcomes, double seconds) {
  CriterionResult r{1, "reference structure equations reproduced exactly", true, ""};
  int products = 0;
  int errata = 0;
  std::string failures;
  for (const auto& o : outcomes) {
    products += o.equations_checked;
    errata += o.errata_applied;
    if (!o.passed) {
      r.passed = false;
      failures += "; " + o.id + ": " + o.detail;
    }
  }
  if (seconds >= 10) r.passed = false;
  r.detail = std::to_string(products) + " products, " + std::to_string(errata) +
             " printed lines replaced (each contradicts the printed dimensions or associativity), " + fixed(seconds) + " s" + failures;
  return r;
}

CriterionResult refusal(const Tolerances& tol) {
  CriterionResult r{2, "(S3, Z3) refused with witness; A1-A3 hold, A4 fails", false, ""};
  const auto ctx = PairContext::make(subgroup(build_group("S3"), std::vector<std::string>{"(123)"}), tol);
  std::string message;
  bool refused = false;
  try {
    pair_algebra(ctx);
  } catch (const Error& e) {
    refused = e.kind() == ErrorKind::NotAdmissible;
    message = e.what();
  }
  const auto adm = is_admissible(ctx);
  const auto rel = verify_associativity(ctx);
  const bool a123 = rel.relations[0].passed && rel.relations[1].passed && rel.relations[2].passed;
  r.passed = refused && !adm.admissible && adm.witness && a123 && !rel.a4().passed;
  r.detail = message.empty() ? "no refusal" : message;
  if (rel.a4().triple)
    r.detail += "; A4 fails at (" + std::to_string((*rel.a4().triple)[0]) + "," +
                std::to_string((*rel.a4().triple)[1]) + "," + std::to_string((*rel.a4().triple)[2]) + ")";
  return r;
}

CriterionResult dimensions(const std::vector<ExampleOutcome>& outcomes) {
  CriterionResult r{3, "dimension values within 1e-9", true, ""};
  double worst = 0;
  int n = 0;
  for (const auto& o : outcomes) {
    if (!o.admissible) continue;
    ++n;
    if (!o.relabeling || !(o.max_dimension_error <= 1e-9)) {
      r.passed = false;
      r.detail += o.id + " off by " + fixed(o.max_dimension_error) + "; ";
    }
    worst = std::max(worst, o.max_dimension_error);
  }
  r.detail += std::to_string(n) + " examples, max error " + fixed(worst);
  return r;
}

CriterionResult admissibility_agreement(const Contexts& c) {
  CriterionResult r{4, "is_admissible agrees with brute-force A4", true, ""};
  const std::vector<std::string> required = {"D4>Z4", "A4>V4", "S4>Z4", "S4>A4", "Z2>1", "Z3>1", "S3>Z2", "Z4>Z2",
                                             "Z2xZ2>Z2", "S3>Z3", "D4>Z2", "A4>Z3", "S4>Z2", "S4>S3"};
  for (const auto& name : required)
    if (std::none_of(c.pairs.begin(), c.pairs.end(), [&](const CatalogPair& p) { return p.name == name; })) {
      r.passed = false;
      r.detail += "missing " + name + "; ";
    }
  int admissible = 0;
  for (std::size_t i = 0; i < c.ctx.size(); ++i) {
    if (c.ctx[i].group().order() > 24) {
      r.passed = false;
      r.detail += c.pairs[i].name + " exceeds order 24; ";
    }
    const bool adm = is_admissible(c.ctx[i]).admissible;
    const bool a4 = verify_associativity(c.ctx[i]).a4().passed;
    admissible += adm;
    if (adm != a4) {
      r.passed = false;
      r.detail += c.pairs[i].name + " disagrees; ";
    }
  }
  if (c.ctx.size() < 15) r.passed = false;
  r.detail += std::to_string(c.ctx.size()) + " pairs, " + std::to_string(admissible) + " admissible";
  return r;
}

CriterionResult reciprocity(const Contexts& c, const Tolerances& tol) {
  CriterionResult r{5, "induce and restrict multiplicities agree", true, ""};
  double worst = 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < c.ctx.size(); ++i) {
    const auto& ctx = c.ctx[i];
    for (const auto& tau : ctx.subgroup_table->irreducibles())
      for (const auto& pi : ctx.group_table->irreducibles()) {
        ++count;
        try {
          const auto m = frobenius_multiplicity(ctx.sub, tau, pi, tol);
          const double ri = std::abs(m.via_induce - static_cast<double>(m.multiplicity));
          const double rr = std::abs(m.via_restrict - static_cast<double>(m.multiplicity));
          worst = std::max({worst, ri, rr});
          if (std::llround(m.via_induce) != std::llround(m.via_restrict) || ri >= 1e-6 || rr >= 1e-6) r.passed = false;
        } catch (const Error& e) {
          r.passed = false;
          r.detail += c.pairs[i].name + ": " + e.what() + "; ";
        }
      }
  }
  r.detail += std::to_string(count) + " (tau, pi) pairs, max residual " + fixed(worst);
  return r;
}

CriterionResult hypergroups(const Contexts& c, const Tolerances& tol) {
  CriterionResult r{6, "normalized pair algebras are hypergroups", true, ""};
  const Tolerances tight{1e-9, tol.integral};
  double worst_row = 0;
  double worst_weight = 0;
  int n = 0;
  for (std::size_t i = 0; i < c.ctx.size(); ++i) {
    const auto& ctx = c.ctx[i];
    if (!is_admissible(ctx).admissible) continue;
    ++n;
    try {
      const auto f = pair_algebra(ctx);
      const auto d = dimension_function(f, tol);
      const auto h = normalize_to_hypergroup(f, d, tight);
      const int k = h.rank();
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          double s = 0;
          for (int x = 0; x < k; ++x) s += h.coefficient(a, b, x);
          worst_row = std::max(worst_row, std::abs(s - 1));
        }
        worst_weight = std::max(worst_weight, std::abs(h.weights()[static_cast<std::size_t>(a)] - d[a] * d[a]));
      }
      const auto report = check_hypergroup_axioms(h, tight);
      if (!report.ok()) {
        r.passed = false;
        r.detail += c.pairs[i].name + ": " + report.first_failure()->message() + "; ";
      }
    } catch (const Error& e) {
      r.passed = false;
      r.detail += c.pairs[i].name + ": " + e.what() + "; ";
    }
  }
  if (worst_row > 1e-9 || worst_weight > 1e-9) r.passed = false;
  r.detail += std::to_string(n) + " algebras, row-sum error " + fixed(worst_row) + ", weight error " + fixed(worst_weight);
  return r;
}

// Largest |(X_i R)_l - d_i R_l| and |(R X_i)_l - d_i R_l| over i and l.
double haar_residual(const FusionAlgebra& f, const DimensionFunction& d) {
  const int n = f.rank();
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<double> left(static_cast<std::size_t>(n), 0.0);
    std::vector<double> right(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
      for (auto [l, a] : f.product(i, k)) left[static_cast<std::size_t>(l)] += d[k] * static_cast<double>(a);
      for (auto [l, a] : f.product(k, i)) right[static_cast<std::size_t>(l)] += d[k] * static_cast<double>(a);
    }
    for (int l = 0; l < n; ++l) {
      const double want = d[i] * d[l];
      worst = std::max({worst, std::abs(left[static_cast<std::size_t>(l)] - want),
                        std::abs(right[static_cast<std::size_t>(l)] - want)});
    }
  }
  return worst;
}

CriterionResult haar(const Contexts& c, const Tolerances& tol) {
  CriterionResult r{7, "X R = d(X) R within 1e-8", true, ""};
  std::vector<std::pair<std::string, FusionAlgebra>> algebras;
  std::vector<std::string> seen_groups;
  for (std::size_t i = 0; i < c.ctx.size(); ++i) {
    const auto& ctx = c.ctx[i];
    if (is_admissible(ctx).admissible) algebras.emplace_back(c.pairs[i].name, pair_algebra(ctx));
    if (std::find(seen_groups.begin(), seen_groups.end(), c.pairs[i].group) == seen_groups.end()) {
      seen_groups.push_back(c.pairs[i].group);
      const auto f = character_fusion_algebra(*ctx.group_table, tol);
      algebras.emplace_back("F(" + c.pairs[i].group + ")", f);
      algebras.emplace_back("F(" + c.pairs[i].group + ")x Z2", direct_product_with_z2(f));
      algebras.emplace_back("join F(" + c.pairs[i].group + ")", join(f, dimension_function(f, tol), tol));
      if (ctx.group().order() <= 12) algebras.emplace_back("C[" + c.pairs[i].group + "]", group_algebra(ctx.group()));
    }
  }
  double worst = 0;
  for (const auto& [name, f] : algebras) {
    try {
      const auto d = dimension_function(f, tol);
      haar_element(f, d, Tolerances{1e-8, tol.integral});
      const double res = haar_residual(f, d);
      worst = std::max(worst, res);
      if (res > 1e-8) {
        r.passed = false;
        r.detail += name + " residual " + fixed(res) + "; ";
      }
    } catch (const Error& e) {
      r.passed = false;
      r.detail += name + ": " + e.what() + "; ";
    }
  }
  r.detail += std::to_string(algebras.size()) + " algebras, max residual " + fixed(worst);
  return r;
}

CriterionResult join_coherence(const Tolerances& tol) {
  CriterionResult r{8, "join and Z2-product coherence", true, ""};
  for (const std::string g : {"Z2", "Z3", "S3", "A4"}) {
    try {
      const auto group = build_group(g);
      const auto f = character_fusion_algebra(*character_table(group), tol);
      const auto joined = join(f, dimension_function(f, tol), tol);
      const auto trivial = pair_algebra(PairContext::make(trivial_subgroup(group), tol));
      const auto whole = pair_algebra(PairContext::make(whole_group(group), tol));
      const bool a = algebra_isomorphic(joined, trivial).has_value();
      const bool b = algebra_isomorphic(direct_product_with_z2(f), whole).has_value();
      if (!a || !b) r.passed = false;
      r.detail += g + (a ? " join ok" : " join FAILS") + (b ? ", Z2 ok" : ", Z2 FAILS") + "; ";
    } catch (const Error& e) {
      r.passed = false;
      r.detail += g + ": " + e.what() + "; ";
    }
  }
  r.detail.erase(r.detail.size() - 2);
  return r;
}

CriterionResult shapes(const Contexts& c, const Tolerances& tol) {
  CriterionResult r{9, "diagram shapes and degree identity", true, ""};
  struct Shape {
    const char* group;
    std::vector<std::string> gens;
    WeightedGraph graph;
    const char* name;
  };
  const std::vector<Shape> expected = {{"Z2", {}, path_graph(3), "A3"},
                                       {"Z3", {}, star_graph(3), "D4"},
                                       {"S3", {"(12)"}, path_graph(5), "A5"}};
  for (const auto& s : expected) {
    const auto ctx = PairContext::make(subgroup(build_group(s.group), s.gens), tol);
    const bool ok = graphs_isomorphic(underlying_graph(frobenius_diagram(ctx)), s.graph);
    if (!ok) r.passed = false;
    r.detail += std::string(s.group) + (ok ? " is " : " is not ") + s.name + "; ";
  }
  int holds = 0;
  for (std::size_t i = 0; i < c.ctx.size(); ++i) {
    std::string why;
    if (degree_identity_holds(frobenius_diagram(c.ctx[i]), &why)) {
      ++holds;
    } else {
      r.passed = false;
      r.detail += c.pairs[i].name + ": " + why + "; ";
    }
  }
  r.detail += "degree identity " + std::to_string(holds) + "/" + std::to_string(c.ctx.size());
  return r;
}

CriterionResult tables(const Contexts& c) {
  CriterionResult r{10, "character-table orthogonality and degree sums", true, ""};
  std::vector<GroupPtr> groups;
  auto add = [&](const GroupPtr& g) {
    if (std::none_of(groups.begin(), groups.end(), [&](const GroupPtr& h) { return h->same_structure(*g); }))
      groups.push_back(g);
  };
  for (const auto& ctx : c.ctx) {
    add(ctx.sub.parent());
    add(ctx.sub.as_group());
  }
  double worst = 0;
  for (const auto& g : groups) {
    const auto t = character_table(g);
    const int k = g->num_classes();
    const double n = g->order();
    std::int64_t squares = 0;
    for (const auto& chi : t->irreducibles()) squares += static_cast<std::int64_t>(chi.degree()) * chi.degree();
    if (squares != g->order() || static_cast<int>(t->size()) != k) r.passed = false;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Complex row = 0;
        Complex col = 0;
        for (int x = 0; x < k; ++x) {
          const auto& a = (*t)[static_cast<std::size_t>(i)].function();
          const auto& b = (*t)[static_cast<std::size_t>(j)].function();
          row += static_cast<double>(g->class_size(x)) * a.at_class(x) * std::conj(b.at_class(x));
          const auto& chi = (*t)[static_cast<std::size_t>(x)].function();
          col += chi.at_class(i) * std::conj(chi.at_class(j));
        }
        row /= n;
        const double col_want = i == j ? n / g->class_size(i) : 0.0;
        worst = std::max({worst, std::abs(row - Complex(i == j ? 1.0 : 0.0)), std::abs(col - col_want)});
      }
  }
  if (worst > 1e-8) r.passed = false;
  r.detail = std::to_string(groups.size()) + " groups, max orthogonality error " + fixed(worst);
  return r;
}

}  // namespace

std::vector<CriterionResult> acceptance_criteria(const Tolerances& tol) {
  std::vector<CriterionResult> out;
  const auto start = std::chrono::steady_clock::now();
  std::vector<ExampleOutcome> outcomes;
  for (const auto& e : reference_examples()) outcomes.push_back(run_example(e, tol));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::vector<ExampleOutcome> admissible;
  for (const auto& o : outcomes)
    if (reference_example(o.id).admissible) admissible.push_back(o);
  out.push_back(regression(admissible, seconds));
  out.push_back(refusal(tol));
  out.push_back(dimensions(admissible));

  const auto contexts = catalog_contexts(tol);
  out.push_back(admissibility_agreement(contexts));
  out.push_back(reciprocity(contexts, tol));
  out.push_back(hypergroups(contexts, tol));
  out.push_back(haar(contexts, tol));
  out.push_back(join_coherence(tol));
  out.push_back(shapes(contexts, tol));
  out.push_back(tables(contexts));
  return out;
}

std::string format(const CriterionResult& r) {
  char num[8];
  std::snprintf(num, sizeof num, "%2d", r.number);
  return std::string(r.passed ? "PASS " : "FAIL ") + num + "  " + r.title + ": " + r.detail;
}

}  // namespace fusionkit
