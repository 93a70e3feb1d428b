#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "fusionkit/errors.hpp"
#include "fusionkit/group.hpp"

namespace fusionkit {

GroupSpec cyclic(int n) { return {GroupSpec::Cyclic{n}}; }
GroupSpec symmetric(int n) { return {GroupSpec::Symmetric{n}}; }
GroupSpec alternating(int n) { return {GroupSpec::Alternating{n}}; }
GroupSpec dihedral(int n) { return {GroupSpec::Dihedral{n}}; }
GroupSpec product(GroupSpec left, GroupSpec right) {
  return {GroupSpec::Product{std::make_shared<const GroupSpec>(std::move(left)),
                             std::make_shared<const GroupSpec>(std::move(right))}};
}
GroupSpec semidirect(GroupSpec normal, GroupSpec acting, Action action) {
  return {GroupSpec::Semidirect{std::make_shared<const GroupSpec>(std::move(normal)),
                                std::make_shared<const GroupSpec>(std::move(acting)), std::move(action)}};
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad_spec(const std::string& msg) { throw Error(ErrorKind::InvalidSpec, msg); }
[[noreturn]] void bad_action(const std::string& msg) { throw Error(ErrorKind::InvalidAction, msg); }

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_product();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    bad_spec("group spec '" + std::string(text_) + "': " + msg + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  int number() {
    skip_ws();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(v);
  }

  GroupSpec parse_product() {
    GroupSpec left = parse_term();
    while (accept('x')) left = product(std::move(left), parse_term());
    return left;
  }

  GroupSpec parse_term() {
    skip_ws();
    if (accept_word("semidirect")) {
      expect('(');
      GroupSpec normal = parse_product();
      expect(',');
      GroupSpec acting = parse_product();
      expect(',');
      Action action = parse_action();
      expect(')');
      return semidirect(std::move(normal), std::move(acting), std::move(action));
    }
    if (accept('(')) {
      GroupSpec inner = parse_product();
      expect(')');
      return inner;
    }
    if (pos_ >= text_.size()) fail("expected a group");
    const char head = text_[pos_++];
    const int n = number();
    if (n < 1) fail("group parameter must be positive");
    switch (head) {
      case 'Z': return cyclic(n);
      case 'S': return symmetric(n);
      case 'A': return alternating(n);
      case 'D': return dihedral(n);
      default: --pos_; fail("unknown group family");
    }
  }

  Action parse_action() {
    Action action;
    if (accept_word("inv")) {
      action.kind = Action::Kind::Inversion;
    } else if (accept_word("triv")) {
      action.kind = Action::Kind::Trivial;
    } else if (accept_word("perm")) {
      action.kind = Action::Kind::Generator;
      expect('[');
      if (!accept(']')) {
        do {
          action.generator_image.push_back(number());
        } while (accept(','));
        expect(']');
      }
    } else {
      fail("expected an action: inv, triv or perm[...]");
    }
    return action;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

long double spec_order(const GroupSpec& spec) {
  return std::visit(overloaded{
                        [](const GroupSpec::Cyclic& c) -> long double { return c.n; },
                        [](const GroupSpec::Symmetric& s) -> long double {
                          long double f = 1;
                          for (int i = 2; i <= s.n; ++i) f *= i;
                          return f;
                        },
                        [](const GroupSpec::Alternating& a) -> long double {
                          long double f = 1;
                          for (int i = 2; i <= a.n; ++i) f *= i;
                          return a.n >= 2 ? f / 2 : 1;
                        },
                        [](const GroupSpec::Dihedral& d) -> long double { return 2.0L * d.n; },
                        [](const GroupSpec::Product& p) { return spec_order(*p.left) * spec_order(*p.right); },
                        [](const GroupSpec::Semidirect& s) { return spec_order(*s.normal) * spec_order(*s.acting); },
                    },
                    spec.term);
}

GroupPtr build_cyclic(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return FiniteGroup::create(t);
}

bool is_even(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

// Permutations of {0..n-1} in lexicographic order, optionally only the even ones.
GroupPtr build_permutation_group(int n, bool even_only) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const auto m = perms.size();
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<int> r(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      t[a][b] = index.at(r);
    }
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(permutation_label(q));
  FiniteGroup::Extras extras;
  extras.permutation_degree = n;
  extras.permutations = perms;
  return FiniteGroup::create(t, std::move(labels), std::move(extras));
}

GroupPtr build_direct(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order();
  const int nb = b.order();
  const auto n = static_cast<std::size_t>(na * nb);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1) {
      const auto i = static_cast<std::size_t>(x1 * nb + y1);
      labels[i] = "(" + a.label(x1) + "," + b.label(y1) + ")";
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t[i][static_cast<std::size_t>(x2 * nb + y2)] = a.multiply(x1, x2) * nb + b.multiply(y1, y2);
    }
  Factorization f;
  for (int x = 0; x < na; ++x) f.normal.push_back(x * nb + b.identity());
  for (int y = 0; y < nb; ++y) f.complement.push_back(a.identity() * nb + y);
  f.direct = true;
  FiniteGroup::Extras extras;
  extras.factorization = std::move(f);
  return FiniteGroup::create(t, std::move(labels), std::move(extras));
}

std::vector<std::vector<int>> action_table(const FiniteGroup& normal, const FiniteGroup& acting,
                                           const Action& action) {
  const int nn = normal.order();
  const int nk = acting.order();
  std::vector<int> id(static_cast<std::size_t>(nn));
  std::iota(id.begin(), id.end(), 0);
  switch (action.kind) {
    case Action::Kind::Trivial:
      return std::vector<std::vector<int>>(static_cast<std::size_t>(nk), id);
    case Action::Kind::Table:
      return action.table;
    case Action::Kind::Inversion:
    case Action::Kind::Generator: {
      std::vector<int> phi(static_cast<std::size_t>(nn));
      if (action.kind == Action::Kind::Inversion) {
        for (int h = 0; h < nn; ++h) phi[static_cast<std::size_t>(h)] = normal.inverse(h);
      } else {
        if (action.generator_image.size() != static_cast<std::size_t>(nn))
          bad_action("generator image must list " + std::to_string(nn) + " elements");
        for (int v : action.generator_image)
          if (v < 0 || v >= nn) bad_action("generator image entry out of range");
        phi = action.generator_image;
      }
      int gen = -1;
      for (int k = 0; k < nk && gen < 0; ++k)
        if (acting.element_order(k) == nk) gen = k;
      if (gen < 0) bad_action("acting group is not cyclic; give a full action table");
      std::vector<std::vector<int>> table(static_cast<std::size_t>(nk));
      std::vector<int> power = id;
      int k = acting.identity();
      for (int j = 0; j < nk; ++j) {
        table[static_cast<std::size_t>(k)] = power;
        std::vector<int> next(static_cast<std::size_t>(nn));
        for (int h = 0; h < nn; ++h)
          next[static_cast<std::size_t>(h)] = phi[static_cast<std::size_t>(power[static_cast<std::size_t>(h)])];
        power = std::move(next);
        k = acting.multiply(k, gen);
      }
      return table;
    }
  }
  return {};
}

void validate_action(const FiniteGroup& normal, const FiniteGroup& acting,
                     const std::vector<std::vector<int>>& act) {
  const int nn = normal.order();
  const int nk = acting.order();
  if (act.size() != static_cast<std::size_t>(nk)) bad_action("action table needs one row per acting element");
  for (int k = 0; k < nk; ++k) {
    const auto& row = act[static_cast<std::size_t>(k)];
    if (row.size() != static_cast<std::size_t>(nn)) bad_action("action row has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(nn), false);
    for (int v : row) {
      if (v < 0 || v >= nn || seen[static_cast<std::size_t>(v)]) bad_action("action row is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
    for (int a = 0; a < nn; ++a)
      for (int b = 0; b < nn; ++b)
        if (row[static_cast<std::size_t>(normal.multiply(a, b))] !=
            normal.multiply(row[static_cast<std::size_t>(a)], row[static_cast<std::size_t>(b)]))
          bad_action("acting element " + acting.label(k) + " does not act by an automorphism");
  }
  for (int k1 = 0; k1 < nk; ++k1)
    for (int k2 = 0; k2 < nk; ++k2) {
      const auto& composite = act[static_cast<std::size_t>(acting.multiply(k1, k2))];
      for (int h = 0; h < nn; ++h)
        if (composite[static_cast<std::size_t>(h)] !=
            act[static_cast<std::size_t>(k1)][static_cast<std::size_t>(act[static_cast<std::size_t>(k2)][static_cast<std::size_t>(h)])])
          bad_action("action is not a homomorphism into Aut(N)");
    }
}

GroupPtr build_semidirect(const FiniteGroup& normal, const FiniteGroup& acting, const Action& action,
                          bool dihedral_labels) {
  auto act = action_table(normal, acting, action);
  validate_action(normal, acting, act);
  const int nn = normal.order();
  const int nk = acting.order();
  const auto n = static_cast<std::size_t>(nn * nk);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  bool trivial = true;
  for (int k = 0; k < nk; ++k)
    for (int h = 0; h < nn; ++h) trivial = trivial && act[static_cast<std::size_t>(k)][static_cast<std::size_t>(h)] == h;
  for (int h1 = 0; h1 < nn; ++h1)
    for (int k1 = 0; k1 < nk; ++k1) {
      const auto i = static_cast<std::size_t>(h1 * nk + k1);
      if (dihedral_labels) {
        std::string r = h1 == 0 ? "" : (h1 == 1 ? "r" : "r" + std::to_string(h1));
        std::string s = k1 == 0 ? "" : "s";
        labels[i] = (r + s).empty() ? "e" : r + s;
      } else {
        labels[i] = "(" + normal.label(h1) + "," + acting.label(k1) + ")";
      }
      for (int h2 = 0; h2 < nn; ++h2)
        for (int k2 = 0; k2 < nk; ++k2) {
          const int h = normal.multiply(h1, act[static_cast<std::size_t>(k1)][static_cast<std::size_t>(h2)]);
          t[i][static_cast<std::size_t>(h2 * nk + k2)] = h * nk + acting.multiply(k1, k2);
        }
    }
  Factorization f;
  for (int h = 0; h < nn; ++h) f.normal.push_back(h * nk + acting.identity());
  for (int k = 0; k < nk; ++k) f.complement.push_back(normal.identity() * nk + k);
  f.direct = trivial;
  FiniteGroup::Extras extras;
  extras.factorization = std::move(f);
  return FiniteGroup::create(t, std::move(labels), std::move(extras));
}

std::string action_string(const Action& a) {
  switch (a.kind) {
    case Action::Kind::Trivial: return "triv";
    case Action::Kind::Inversion: return "inv";
    case Action::Kind::Generator: {
      std::string s = "perm[";
      for (std::size_t i = 0; i < a.generator_image.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a.generator_image[i]);
      }
      return s + "]";
    }
    case Action::Kind::Table: return "table";
  }
  return "";
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const GroupSpec& spec) {
  return std::visit(overloaded{
                        [](const GroupSpec::Cyclic& c) { return "Z" + std::to_string(c.n); },
                        [](const GroupSpec::Symmetric& s) { return "S" + std::to_string(s.n); },
                        [](const GroupSpec::Alternating& a) { return "A" + std::to_string(a.n); },
                        [](const GroupSpec::Dihedral& d) { return "D" + std::to_string(d.n); },
                        [](const GroupSpec::Product& p) {
                          auto wrap = [](const GroupSpec& s) {
                            return std::holds_alternative<GroupSpec::Product>(s.term) ? "(" + to_string(s) + ")"
                                                                                       : to_string(s);
                          };
                          return to_string(*p.left) + "x" + wrap(*p.right);
                        },
                        [](const GroupSpec::Semidirect& s) {
                          return "semidirect(" + to_string(*s.normal) + "," + to_string(*s.acting) + "," +
                                 action_string(s.action) + ")";
                        },
                    },
                    spec.term);
}

GroupPtr build_group(const GroupSpec& spec) {
  if (spec_order(spec) > kMaxGroupOrder)
    throw Error(ErrorKind::OrderLimit, "group " + to_string(spec) + " exceeds order limit " +
                                           std::to_string(kMaxGroupOrder));
  return std::visit(overloaded{
                        [](const GroupSpec::Cyclic& c) { return build_cyclic(c.n); },
                        [](const GroupSpec::Symmetric& s) { return build_permutation_group(s.n, false); },
                        [](const GroupSpec::Alternating& a) { return build_permutation_group(a.n, true); },
                        [](const GroupSpec::Dihedral& d) {
                          Action inv{Action::Kind::Inversion, {}, {}};
                          return build_semidirect(*build_cyclic(d.n), *build_cyclic(2), inv, true);
                        },
                        [](const GroupSpec::Product& p) {
                          return build_direct(*build_group(*p.left), *build_group(*p.right));
                        },
                        [](const GroupSpec::Semidirect& s) {
                          return build_semidirect(*build_group(*s.normal), *build_group(*s.acting), s.action, false);
                        },
                    },
                    spec.term);
}

GroupPtr build_group(std::string_view spec_text) { return build_group(parse_group_spec(spec_text)); }

}  // namespace fusionkit
