#include "fusionkit/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "fusionkit/errors.hpp"

namespace fusionkit {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void parse_error_at(std::string_view text, std::size_t offset, const std::string& msg) {
  const auto [line, column] = line_column(text, offset);
  throw ParseError(msg, line, column);
}

// Byte offset of the index-th element of the array stored under "key", for
// error positions; 0 when it cannot be located.
std::size_t locate_entry(std::string_view text, std::string_view key, std::size_t index) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  std::size_t pos = text.find(quoted);
  if (pos == std::string_view::npos) return 0;
  pos = text.find('[', pos + quoted.size());
  if (pos == std::string_view::npos) return 0;
  int depth = 0;
  std::size_t seen = 0;
  bool in_string = false;
  bool expecting = true;
  for (std::size_t i = pos + 1; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
    if (depth == 0 && expecting) {
      if (c == ']') return 0;
      if (seen == index) return i;
      ++seen;
      expecting = false;
    }
    if (c == '"') in_string = true;
    else if (c == '[' || c == '{') ++depth;
    else if (c == ']' || c == '}') {
      if (depth == 0) return 0;
      --depth;
    } else if (c == ',' && depth == 0) {
      expecting = true;
    }
  }
  return 0;
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_error_at(text, e.byte > 0 ? e.byte - 1 : 0, "malformed JSON");
  }
}

json document(std::string_view kind) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

json expect_document(std::string_view text, std::string_view kind) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("schema"))
    throw Error(ErrorKind::SchemaMismatch, "document has no \"schema\" field");
  if (!j["schema"].is_string() || j["schema"].get<std::string>() != kSchema)
    throw Error(ErrorKind::SchemaMismatch, "unsupported schema " + j["schema"].dump() + ", expected " + std::string(kSchema));
  if (!j.contains("kind") || !j["kind"].is_string() || j["kind"].get<std::string>() != kind)
    throw Error(ErrorKind::SchemaMismatch, "expected kind \"" + std::string(kind) + "\"");
  return j;
}

// Field access with type errors mapped to SchemaMismatch.
template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::SchemaMismatch, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SchemaMismatch, std::string("field \"") + key + "\": " + e.what());
  }
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorKind::SchemaMismatch, "complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json group_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order();
  j["labels"] = g.labels();
  j["cayley"] = g.cayley_rows();
  if (auto deg = g.permutation_degree()) {
    j["permutation_degree"] = *deg;
    j["permutations"] = g.permutations();
  }
  if (const auto& f = g.factorization())
    j["factorization"] = {{"normal", f->normal}, {"complement", f->complement}, {"direct", f->direct}};
  return j;
}

GroupPtr group_from(const json& j) {
  FiniteGroup::Extras extras;
  if (j.contains("permutation_degree")) {
    extras.permutation_degree = field<int>(j, "permutation_degree");
    extras.permutations = field<std::vector<std::vector<int>>>(j, "permutations");
  }
  if (j.contains("factorization")) {
    const json& f = j["factorization"];
    extras.factorization = Factorization{field<std::vector<int>>(f, "normal"), field<std::vector<int>>(f, "complement"),
                                         field<bool>(f, "direct")};
  }
  const auto cayley = field<std::vector<std::vector<int>>>(j, "cayley");
  if (field<int>(j, "order") != static_cast<int>(cayley.size()))
    throw Error(ErrorKind::SchemaMismatch, "order does not match the Cayley table");
  return FiniteGroup::create(cayley, field<std::vector<std::string>>(j, "labels"), std::move(extras));
}

json basis_json(const std::vector<BasisLabel>& basis) {
  json out = json::array();
  for (const auto& b : basis) out.push_back({{"name", b.name}, {"tag", std::string(to_string(b.tag))}, {"origin", b.origin}});
  return out;
}

std::vector<BasisLabel> basis_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::SchemaMismatch, "basis must be an array");
  std::vector<BasisLabel> out;
  for (const auto& e : j) {
    BasisLabel b;
    b.name = field<std::string>(e, "name");
    const auto tag = field<std::string>(e, "tag");
    if (tag == "circle") b.tag = BasisLabel::Tag::Circle;
    else if (tag == "bullet") b.tag = BasisLabel::Tag::Bullet;
    else if (tag == "abstract") b.tag = BasisLabel::Tag::Abstract;
    else throw Error(ErrorKind::SchemaMismatch, "unknown tag \"" + tag + "\"");
    b.origin = field<int>(e, "origin");
    out.push_back(std::move(b));
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string serialize(const FiniteGroup& group) {
  json j = document("group");
  j["group"] = group_json(group);
  return dump(j);
}

std::string serialize(const CharacterTable& table) {
  const FiniteGroup& g = *table.group();
  json j = document("character_table");
  j["group"] = group_json(g);
  json sizes = json::array();
  json reps = json::array();
  for (int c = 0; c < g.num_classes(); ++c) {
    sizes.push_back(g.class_size(c));
    reps.push_back(g.label(g.classes()[static_cast<std::size_t>(c)].front()));
  }
  j["class_sizes"] = sizes;
  j["class_representatives"] = reps;
  json chars = json::array();
  for (const auto& chi : table.irreducibles()) {
    json values = json::array();
    for (auto v : chi.function().values()) values.push_back(complex_json(v));
    chars.push_back({{"degree", chi.degree()}, {"values", values}});
  }
  j["characters"] = chars;
  return dump(j);
}

std::string serialize(const FusionAlgebra& f) {
  json j = document("fusion_algebra");
  j["basis"] = basis_json(f.basis());
  j["involution"] = f.involutions();
  json s = json::array();
  for (int a = 0; a < f.rank(); ++a)
    for (int b = 0; b < f.rank(); ++b)
      for (auto [k, c] : f.product(a, b)) s.push_back(json::array({a, b, k, c}));
  j["structure"] = s;
  return dump(j);
}

std::string serialize(const Hypergroup& h) {
  json j = document("hypergroup");
  j["basis"] = basis_json(h.basis());
  j["involution"] = h.involutions();
  j["weights"] = h.weights();
  json s = json::array();
  for (int a = 0; a < h.rank(); ++a)
    for (int b = 0; b < h.rank(); ++b)
      for (int k = 0; k < h.rank(); ++k)
        if (double c = h.coefficient(a, b, k); c != 0.0) s.push_back(json::array({a, b, k, c}));
  j["coefficients"] = s;
  return dump(j);
}

std::string serialize(const FrobeniusDiagram& d) {
  json j = document("frobenius_diagram");
  j["index"] = d.index;
  auto nodes = [](const std::vector<DiagramNode>& v) {
    json out = json::array();
    for (const auto& n : v) out.push_back({{"label", n.label}, {"degree", n.degree}});
    return out;
  };
  j["circle_nodes"] = nodes(d.circle_nodes);
  j["bullet_nodes"] = nodes(d.bullet_nodes);
  json e = json::array();
  for (const auto& x : d.edges) e.push_back(json::array({x.circle, x.bullet, x.multiplicity}));
  j["edges"] = e;
  return dump(j);
}

std::string document_kind(std::string_view text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("schema") || !j["schema"].is_string() || j["schema"].get<std::string>() != kSchema)
    throw Error(ErrorKind::SchemaMismatch, "not a " + std::string(kSchema) + " document");
  return field<std::string>(j, "kind");
}

GroupPtr deserialize_group(std::string_view text) {
  const json j = expect_document(text, "group");
  if (!j.contains("group")) throw Error(ErrorKind::SchemaMismatch, "missing field \"group\"");
  return group_from(j["group"]);
}

CharacterTablePtr deserialize_character_table(std::string_view text) {
  const json j = expect_document(text, "character_table");
  if (!j.contains("group")) throw Error(ErrorKind::SchemaMismatch, "missing field \"group\"");
  GroupPtr g = group_from(j["group"]);
  const auto sizes = field<std::vector<int>>(j, "class_sizes");
  if (sizes.size() != static_cast<std::size_t>(g->num_classes()))
    throw Error(ErrorKind::SchemaMismatch, "class count does not match the group");
  for (int c = 0; c < g->num_classes(); ++c)
    if (sizes[static_cast<std::size_t>(c)] != g->class_size(c))
      throw Error(ErrorKind::SchemaMismatch, "class sizes do not match the group");
  if (!j.contains("characters") || !j["characters"].is_array())
    throw Error(ErrorKind::SchemaMismatch, "missing array \"characters\"");
  std::vector<Character> chars;
  std::size_t row = 0;
  for (const auto& c : j["characters"]) {
    std::vector<Complex> values;
    if (!c.contains("values") || !c["values"].is_array()) throw Error(ErrorKind::SchemaMismatch, "character needs values");
    for (const auto& v : c["values"]) values.push_back(complex_from(v));
    try {
      Character chi(ClassFunction(g, std::move(values)), true);
      if (chi.degree() != field<int>(c, "degree"))
        parse_error_at(text, locate_entry(text, "characters", row), "degree does not match the identity value");
      chars.push_back(std::move(chi));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      parse_error_at(text, locate_entry(text, "characters", row), e.what());
    }
    ++row;
  }
  return std::make_shared<const CharacterTable>(g, std::move(chars));
}

FusionAlgebra deserialize_algebra(std::string_view text) {
  const json j = expect_document(text, "fusion_algebra");
  auto basis = basis_from(j.contains("basis") ? j["basis"] : json());
  const auto n = static_cast<std::int64_t>(basis.size());
  auto inv = field<std::vector<int>>(j, "involution");
  if (!j.contains("structure") || !j["structure"].is_array())
    throw Error(ErrorKind::SchemaMismatch, "missing array \"structure\"");
  std::vector<std::vector<FusionAlgebra::Product>> p(basis.size(), std::vector<FusionAlgebra::Product>(basis.size()));
  std::size_t e = 0;
  for (const auto& t : j["structure"]) {
    const std::size_t at = locate_entry(text, "structure", e++);
    if (!t.is_array() || t.size() != 4) parse_error_at(text, at, "structure entry must be [i, j, k, a]");
    for (const auto& x : t)
      if (!x.is_number_integer()) parse_error_at(text, at, "structure entries must be integers");
    const auto i = t[0].get<std::int64_t>();
    const auto jj = t[1].get<std::int64_t>();
    const auto k = t[2].get<std::int64_t>();
    const auto a = t[3].get<std::int64_t>();
    if (i < 0 || i >= n || jj < 0 || jj >= n || k < 0 || k >= n) parse_error_at(text, at, "basis index out of range");
    if (a < 0) parse_error_at(text, at, "F2: negative structure constant " + std::to_string(a));
    p[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)].emplace_back(static_cast<int>(k), a);
  }
  try {
    return FusionAlgebra(std::move(basis), std::move(inv), std::move(p));
  } catch (const Error& e) {
    throw Error(ErrorKind::SchemaMismatch, e.what());
  }
}

Hypergroup deserialize_hypergroup(std::string_view text) {
  const json j = expect_document(text, "hypergroup");
  auto basis = basis_from(j.contains("basis") ? j["basis"] : json());
  const auto n = basis.size();
  auto inv = field<std::vector<int>>(j, "involution");
  auto weights = field<std::vector<double>>(j, "weights");
  if (!j.contains("coefficients") || !j["coefficients"].is_array())
    throw Error(ErrorKind::SchemaMismatch, "missing array \"coefficients\"");
  std::vector<double> c(n * n * n, 0.0);
  std::size_t e = 0;
  for (const auto& t : j["coefficients"]) {
    if (!t.is_array() || t.size() != 4 || !t[3].is_number())
      parse_error_at(text, locate_entry(text, "coefficients", e), "coefficient entry must be [i, j, k, c]");
    std::size_t at = 0;
    for (int q = 0; q < 3; ++q) {
      if (!t[static_cast<std::size_t>(q)].is_number_integer() || t[static_cast<std::size_t>(q)].get<std::int64_t>() < 0 ||
          t[static_cast<std::size_t>(q)].get<std::size_t>() >= n)
        parse_error_at(text, locate_entry(text, "coefficients", e), "basis index out of range");
      at = at * n + t[static_cast<std::size_t>(q)].get<std::size_t>();
    }
    const double v = t[3].get<double>();
    if (v < 0) parse_error_at(text, locate_entry(text, "coefficients", e), "H2: negative coefficient");
    c[at] = v;
    ++e;
  }
  try {
    return Hypergroup(std::move(basis), std::move(inv), std::move(c), std::move(weights));
  } catch (const Error& err) {
    throw Error(ErrorKind::SchemaMismatch, err.what());
  }
}

FrobeniusDiagram deserialize_diagram(std::string_view text) {
  const json j = expect_document(text, "frobenius_diagram");
  FrobeniusDiagram d;
  d.index = field<int>(j, "index");
  auto nodes = [](const json& arr) {
    if (!arr.is_array()) throw Error(ErrorKind::SchemaMismatch, "nodes must be an array");
    std::vector<DiagramNode> out;
    for (const auto& n : arr) out.push_back({field<std::string>(n, "label"), field<int>(n, "degree")});
    return out;
  };
  d.circle_nodes = nodes(j.contains("circle_nodes") ? j["circle_nodes"] : json());
  d.bullet_nodes = nodes(j.contains("bullet_nodes") ? j["bullet_nodes"] : json());
  const auto edges = field<std::vector<std::vector<std::int64_t>>>(j, "edges");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& t = edges[e];
    if (t.size() != 3 || t[0] < 0 || t[0] >= static_cast<std::int64_t>(d.circle_nodes.size()) || t[1] < 0 ||
        t[1] >= static_cast<std::int64_t>(d.bullet_nodes.size()) || t[2] < 1)
      parse_error_at(text, locate_entry(text, "edges", e), "edge must be [circle, bullet, multiplicity >= 1]");
    d.edges.push_back({static_cast<int>(t[0]), static_cast<int>(t[1]), t[2]});
  }
  return d;
}

std::string character_table_text(const CharacterTable& table) {
  const FiniteGroup& g = *table.group();
  auto cell = [](Complex z) {
    char buf[64];
    if (std::abs(z.imag()) < 1e-12)
      std::snprintf(buf, sizeof buf, "%.6g", z.real() + 0.0);
    else
      std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real() + 0.0, z.imag());
    return std::string(buf);
  };
  auto pad = [](std::string s, std::size_t w) {
    while (s.size() < w) s.insert(s.begin(), ' ');
    return s;
  };
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> sizes{"size"};
  std::vector<std::string> reps{"class"};
  for (int c = 0; c < g.num_classes(); ++c) {
    sizes.push_back(std::to_string(g.class_size(c)));
    reps.push_back(g.label(g.classes()[static_cast<std::size_t>(c)].front()));
  }
  rows.push_back(reps);
  rows.push_back(sizes);
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::vector<std::string> r{"π" + std::to_string(i)};
    for (auto v : table[i].function().values()) r.push_back(cell(v));
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream out;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "  " : "") << pad(r[c], width[c]);
    out << '\n';
  }
  return out.str();
}

}  // namespace fusionkit
