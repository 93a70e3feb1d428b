#include "fusionkit/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "fusionkit/errors.hpp"
#include "fusionkit/kernels.hpp"

namespace fusionkit {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::InvalidGroup, msg); }

std::vector<std::vector<int>> compute_classes(const FiniteGroup& g, std::vector<int>& class_of) {
  const int n = g.order();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (owner[static_cast<std::size_t>(x)] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    std::vector<int> cls;
    for (int s = 0; s < n; ++s) {
      const int y = g.conjugate(s, x);
      if (owner[static_cast<std::size_t>(y)] < 0) {
        owner[static_cast<std::size_t>(y)] = id;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  const int e = g.identity();
  std::stable_sort(classes.begin(), classes.end(), [e](const auto& a, const auto& b) {
    const bool ae = a.front() == e || std::binary_search(a.begin(), a.end(), e);
    const bool be = b.front() == e || std::binary_search(b.begin(), b.end(), e);
    if (ae != be) return ae;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  class_of.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int x : classes[c]) class_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
  return classes;
}

std::string cycle_label(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)] || perm[static_cast<std::size_t>(i)] == i) continue;
    out += '(';
    bool first = true;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      if (!first && n > 9) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? std::string("e") : out;
}

// Parses "(12)(3 4)" / "(1,2)" into a permutation of {0..degree-1}; the
// product is composed right to left, matching FiniteGroup::multiply.
std::optional<std::vector<int>> parse_cycles(std::string_view text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) return std::nullopt;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') return std::nullopt;
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) return std::nullopt;
    const std::string_view body = text.substr(i + 1, close - i - 1);
    i = close + 1;
    const bool separated = body.find_first_of(", ") != std::string_view::npos;
    std::vector<int> cycle;
    if (separated) {
      std::string part;
      std::string normalized(body);
      std::replace(normalized.begin(), normalized.end(), ',', ' ');
      std::istringstream words(normalized);
      while (words >> part) {
        if (!std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          return std::nullopt;
        cycle.push_back(std::stoi(part) - 1);
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        cycle.push_back(c - '1');
      }
    }
    for (int p : cycle)
      if (p < 0 || p >= degree) return std::nullopt;
    auto sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    cycles.push_back(std::move(cycle));
  }
  std::vector<int> result(static_cast<std::size_t>(degree));
  std::iota(result.begin(), result.end(), 0);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> c(static_cast<std::size_t>(degree));
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t k = 0; k < it->size(); ++k)
      c[static_cast<std::size_t>((*it)[k])] = (*it)[(k + 1) % it->size()];
    for (auto& r : result) r = c[static_cast<std::size_t>(r)];
  }
  return result;
}

}  // namespace

std::string permutation_label(const std::vector<int>& perm) { return cycle_label(perm); }

GroupPtr FiniteGroup::create(const std::vector<std::vector<int>>& cayley, std::vector<std::string> labels,
                             Extras extras) {
  const auto n = cayley.size();
  if (n == 0) invalid("group table is empty");
  if (n > static_cast<std::size_t>(kMaxGroupOrder))
    throw Error(ErrorKind::OrderLimit, "group order " + std::to_string(n) + " exceeds limit " +
                                           std::to_string(kMaxGroupOrder));
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->order_ = static_cast<int>(n);
  g->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (cayley[a].size() != n) invalid("row " + std::to_string(a) + " has wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      const int v = cayley[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n) invalid("entry out of range in row " + std::to_string(a));
      if (seen[static_cast<std::size_t>(v)]) invalid("table is not a Latin square (row " + std::to_string(a) + ")");
      seen[static_cast<std::size_t>(v)] = true;
      g->table_[a * n + b] = static_cast<std::uint16_t>(v);
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<bool> seen(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      const auto v = g->table_[a * n + b];
      if (seen[v]) invalid("table is not a Latin square (column " + std::to_string(b) + ")");
      seen[v] = true;
    }
  }
  int identity = -1;
  for (std::size_t e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = g->table_[e * n + x] == x && g->table_[x * n + e] == x;
    if (ok) identity = static_cast<int>(e);
  }
  if (identity < 0) invalid("table has no identity");
  g->identity_ = identity;
  g->inverse_.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (g->table_[x * n + y] == identity) {
        if (g->table_[y * n + x] != identity) invalid("element " + std::to_string(x) + " has no two-sided inverse");
        g->inverse_[x] = static_cast<int>(y);
        break;
      }
    }
  }
  if (g->order_ <= kAssociativityCheckLimit) {
    if (auto bad = kernels::parallel::cayley_associativity_violation(g->table_, g->order_))
      invalid("table is not associative at (" + std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) +
              "," + std::to_string((*bad)[2]) + ")");
  }
  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  }
  if (labels.size() != n) invalid("label count does not match order");
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) invalid("element labels are not unique");
  }
  g->labels_ = std::move(labels);
  g->extras_ = std::move(extras);
  g->classes_ = compute_classes(*g, g->class_of_);
  return g;
}

std::optional<int> FiniteGroup::element(std::string_view label) const {
  for (int i = 0; i < order_; ++i)
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  if (label == "e" || label == "()") return identity_;
  if (extras_.permutation_degree) {
    auto perm = parse_cycles(label, *extras_.permutation_degree);
    if (!perm) return std::nullopt;
    for (int i = 0; i < order_; ++i)
      if (extras_.permutations[static_cast<std::size_t>(i)] == *perm) return i;
  }
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = multiply(x, a)) ++k;
  return k;
}

std::vector<std::vector<int>> FiniteGroup::cayley_rows() const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(order_));
  for (int a = 0; a < order_; ++a) {
    rows[static_cast<std::size_t>(a)].reserve(static_cast<std::size_t>(order_));
    for (int b = 0; b < order_; ++b) rows[static_cast<std::size_t>(a)].push_back(multiply(a, b));
  }
  return rows;
}

bool FiniteGroup::same_structure(const FiniteGroup& other) const {
  return order_ == other.order_ && table_ == other.table_;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && a->same_structure(*b));
}

// ---------------------------------------------------------------------------

SubgroupEmbedding SubgroupEmbedding::from_members(GroupPtr parent, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const int n = parent->order();
  SubgroupEmbedding sub;
  sub.from_parent_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] >= n) invalid("subgroup member out of range");
    sub.from_parent_[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  }
  if (sub.from_parent_[static_cast<std::size_t>(parent->identity())] < 0) invalid("subgroup lacks the identity");
  const auto m = members.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const int p = sub.from_parent_[static_cast<std::size_t>(parent->multiply(members[i], members[j]))];
      if (p < 0) invalid("subgroup members are not closed under the product");
      table[i][j] = p;
    }
  std::vector<std::string> labels;
  labels.reserve(m);
  FiniteGroup::Extras extras;
  extras.permutation_degree = parent->permutation_degree();
  for (int x : members) {
    labels.push_back(parent->label(x));
    if (extras.permutation_degree) extras.permutations.push_back(parent->permutations()[static_cast<std::size_t>(x)]);
  }
  sub.group_ = FiniteGroup::create(table, std::move(labels), std::move(extras));
  sub.parent_ = std::move(parent);
  sub.members_ = std::move(members);
  return sub;
}

std::optional<int> SubgroupEmbedding::from_parent(int parent_element) const {
  const int v = from_parent_[static_cast<std::size_t>(parent_element)];
  if (v < 0) return std::nullopt;
  return v;
}

SubgroupEmbedding subgroup(const GroupPtr& group, const std::vector<int>& generators) {
  const int n = group->order();
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  std::vector<int> members{group->identity()};
  in[static_cast<std::size_t>(group->identity())] = true;
  for (int g : generators)
    if (g < 0 || g >= n) throw Error(ErrorKind::InvalidSpec, "generator index out of range");
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (int g : generators) {
      const int y = group->multiply(members[head], g);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        members.push_back(y);
      }
    }
  }
  return SubgroupEmbedding::from_members(group, std::move(members));
}

SubgroupEmbedding subgroup(const GroupPtr& group, const std::vector<std::string>& generators) {
  std::vector<int> gens;
  for (const auto& label : generators) {
    auto e = group->element(label);
    if (!e) throw Error(ErrorKind::InvalidSpec, "unknown element '" + label + "'");
    gens.push_back(*e);
  }
  return subgroup(group, gens);
}

SubgroupEmbedding trivial_subgroup(const GroupPtr& group) { return subgroup(group, std::vector<int>{}); }

SubgroupEmbedding whole_group(const GroupPtr& group) {
  std::vector<int> all(static_cast<std::size_t>(group->order()));
  std::iota(all.begin(), all.end(), 0);
  return SubgroupEmbedding::from_members(group, std::move(all));
}

std::vector<int> x_set(const SubgroupEmbedding& sub, int g) {
  const auto& G = *sub.parent();
  if (g < 0 || g >= G.order() || !sub.contains(g))
    throw Error(ErrorKind::NotInSubgroup, "element is not in the subgroup");
  std::vector<int> out;
  for (int s = 0; s < G.order(); ++s)
    if (sub.contains(G.conjugate(s, g))) out.push_back(s);
  return out;
}

bool is_normal(const SubgroupEmbedding& sub) {
  const auto& G = *sub.parent();
  for (int s = 0; s < G.order(); ++s)
    for (int h : sub.members())
      if (!sub.contains(G.conjugate(s, h))) return false;
  return true;
}

bool centralizes(const SubgroupEmbedding& sub) {
  const auto& G = *sub.parent();
  for (int s = 0; s < G.order(); ++s)
    for (int h : sub.members())
      if (G.multiply(s, h) != G.multiply(h, s)) return false;
  return true;
}

SubgroupEmbedding relative_to(const SubgroupEmbedding& inner, const SubgroupEmbedding& outer) {
  if (!same_group(inner.parent(), outer.parent()))
    throw Error(ErrorKind::GroupMismatch, "subgroups live in different groups");
  std::vector<int> members;
  for (int x : inner.members()) {
    auto y = outer.from_parent(x);
    if (!y) throw Error(ErrorKind::NotInSubgroup, "inner subgroup is not contained in the outer one");
    members.push_back(*y);
  }
  return SubgroupEmbedding::from_members(outer.as_group(), std::move(members));
}

// ---------------------------------------------------------------------------

std::string to_cayley_text(const FiniteGroup& group) {
  std::string out = std::to_string(group.order()) + "\n";
  for (int a = 0; a < group.order(); ++a) {
    for (int b = 0; b < group.order(); ++b) {
      if (b) out += ' ';
      out += std::to_string(group.multiply(a, b));
    }
    out += '\n';
  }
  return out;
}

GroupPtr from_cayley_text(std::string_view text) {
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  struct Token {
    long long value;
    std::size_t line, col;
  };
  std::vector<Token> tokens;
  std::vector<std::size_t> tokens_per_line;
  std::size_t on_line = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      tokens_per_line.push_back(on_line);
      on_line = 0;
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("unexpected character", line, col);
    const std::size_t start_col = col;
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000'000) throw ParseError("number too large", line, start_col);
      ++i;
      ++col;
    }
    tokens.push_back({v, line, start_col});
    ++on_line;
  }
  if (tokens.empty()) throw ParseError("missing order", 1, 1);
  const long long n = tokens.front().value;
  if (n <= 0) throw ParseError("order must be positive", tokens.front().line, tokens.front().col);
  if (n > kMaxGroupOrder)
    throw Error(ErrorKind::OrderLimit, "group order " + std::to_string(n) + " exceeds limit");
  const auto need = static_cast<std::size_t>(n * n + 1);
  if (tokens.size() != need) {
    const auto& where = tokens.size() < need ? tokens.back() : tokens[need];
    throw ParseError("expected " + std::to_string(n * n) + " table entries, found " +
                         std::to_string(tokens.size() - 1),
                     where.line, where.col);
  }
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    if (tokens[k].value >= n) throw ParseError("index out of range", tokens[k].line, tokens[k].col);
    table[(k - 1) / static_cast<std::size_t>(n)][(k - 1) % static_cast<std::size_t>(n)] =
        static_cast<int>(tokens[k].value);
  }
  return FiniteGroup::create(table);
}

}  // namespace fusionkit
