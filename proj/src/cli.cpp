#include "fusionkit/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fusionkit/equations.hpp"
#include "fusionkit/errors.hpp"
#include "fusionkit/fixtures.hpp"
#include "fusionkit/serialize.hpp"

namespace fusionkit::cli {

namespace {

constexpr int kOk = 0;
constexpr int kRefused = 1;
constexpr int kUsage = 2;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpec:
    case ErrorKind::InvalidGroup:
    case ErrorKind::InvalidAction:
    case ErrorKind::OrderLimit:
    case ErrorKind::NotInSubgroup:
    case ErrorKind::SchemaMismatch:
    case ErrorKind::ParseError:
      return kUsage;
    default:
      return kRefused;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidSpec, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidSpec, "cannot write " + path);
  out << text;
}

// Writes to `path` when given, else to the stream.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) out << text;
  else write_file(path, text);
}

// A group from a .fkgroup.json file when the argument names a file, else
// from the group mini-language.
GroupPtr load_group(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    const auto text = read_file(arg);
    const auto kind = document_kind(text);
    if (kind == "character_table") return deserialize_character_table(text)->group();
    return deserialize_group(text);
  }
  return build_group(arg);
}

struct PairArgs {
  std::string group;
  std::vector<std::string> subgroup;
  std::vector<std::string> via;
  std::string out;
};

void add_pair_args(CLI::App* cmd, PairArgs& a, bool with_via) {
  cmd->add_option("group", a.group, "group spec or .fkgroup.json file")->required();
  cmd->add_option("--subgroup", a.subgroup, "subgroup generators by element label (none: trivial subgroup)")
      ->expected(0, -1);
  if (with_via) cmd->add_option("--via", a.via, "generators of an intermediate subgroup")->expected(0, -1);
}

// A bare flag leaves one empty entry behind.
std::vector<std::string> labels(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& s : raw)
    if (!s.empty()) out.push_back(s);
  return out;
}

PairContext context(const PairArgs& a, const Tolerances& tol) {
  return PairContext::make(subgroup(load_group(a.group), labels(a.subgroup)), tol);
}

std::string certificate_list(const std::vector<Certificate>& certs) {
  std::string s;
  for (const auto& c : certs)
    if (c.applies) s += (s.empty() ? "" : ", ") + certificate_name(c.kind);
  return s.empty() ? "none" : s;
}

int pair_check(const PairArgs& a, const Tolerances& tol, std::ostream& out) {
  const auto ctx = context(a, tol);
  std::optional<SubgroupEmbedding> via;
  if (!a.via.empty()) via = subgroup(ctx.sub.parent(), labels(a.via));
  const auto adm = is_admissible(ctx);
  const auto certs = certificates(ctx, via);
  if (adm.admissible) {
    out << "admissible: yes; certificates: " << certificate_list(certs) << "\n";
    return kOk;
  }
  out << "admissible: no; witness: " << describe(ctx, *adm.witness) << "\n";
  const auto rel = verify_associativity(ctx);
  out << "associativity:";
  for (std::size_t i = 0; i < rel.relations.size(); ++i) {
    const auto& r = rel.relations[i];
    out << (i ? "," : "") << " " << r.name;
    if (r.passed) {
      out << " ok";
    } else {
      out << " fails at (" << (*r.triple)[0] << "," << (*r.triple)[1] << "," << (*r.triple)[2] << ")";
    }
  }
  out << "\n";
  return kRefused;
}

int pair_fuse(const PairArgs& a, const Tolerances& tol, std::ostream& out) {
  const auto algebra = pair_algebra(context(a, tol));
  out << structure_equations(algebra);
  if (!a.out.empty()) write_file(a.out, serialize(algebra));
  return kOk;
}

std::string fixture_table(const std::vector<ExampleOutcome>& outcomes) {
  std::ostringstream s;
  s << std::left << std::setw(12) << "example" << std::setw(12) << "admissible" << std::setw(10) << "products"
    << std::setw(8) << "errata" << std::setw(12) << "dim error" << std::setw(9) << "diagram" << "result\n";
  for (const auto& o : outcomes) {
    std::ostringstream dim;
    dim << std::setprecision(2) << o.max_dimension_error;
    s << std::left << std::setw(12) << o.id << std::setw(12) << (o.admissible ? "yes" : "no") << std::setw(10)
      << o.equations_checked << std::setw(8) << o.errata_applied + o.dimension_errata_applied << std::setw(12)
      << (o.admissible ? dim.str() : "-") << std::setw(9) << (o.diagram_matches ? "ok" : "differs")
      << (o.passed ? "PASS" : "FAIL") << "\n";
  }
  return s.str();
}

int fixtures_run(const Tolerances& tol, std::ostream& out) {
  std::vector<ExampleOutcome> outcomes;
  bool ok = true;
  for (const auto& e : reference_examples()) {
    outcomes.push_back(run_example(e, tol));
    ok = ok && outcomes.back().passed;
  }
  out << fixture_table(outcomes);
  for (const auto& o : outcomes)
    if (!o.passed) out << o.id << ": " << o.detail << "\n";
  out << "\n";
  for (const auto& c : acceptance_criteria(tol)) {
    out << format(c) << "\n";
    ok = ok && c.passed;
  }
  return ok ? kOk : kRefused;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fusion rule algebras of finite group pairs"};
  app.name("fusionkit");
  app.require_subcommand(1);
  Tolerances tol;
  app.add_option("--eps-eq", tol.eq, "equality tolerance for class-function values")->capture_default_str();
  app.add_option("--eps-int", tol.integral, "distance to the nearest integer before rounding")->capture_default_str();

  std::string spec;
  std::string out_path;
  auto* group_cmd = app.add_subcommand("group", "build a group and write it as JSON");
  group_cmd->add_option("spec", spec, "group spec, e.g. S4 or semidirect(Z3,Z2,inv)")->required();
  group_cmd->add_option("--out", out_path, ".fkgroup.json output path");

  auto* table_cmd = app.add_subcommand("table", "character table of a group");
  table_cmd->add_option("group", spec, "group spec or .fkgroup.json file")->required();
  table_cmd->add_option("--out", out_path, "write the table as JSON instead of text");

  PairArgs pair_args;
  auto* pair_cmd = app.add_subcommand("pair", "admissibility and fusion rule algebra of a pair (G, G0)");
  pair_cmd->require_subcommand(1);
  auto* check_cmd = pair_cmd->add_subcommand("check", "admissibility with sufficient-condition certificates");
  add_pair_args(check_cmd, pair_args, true);
  auto* fuse_cmd = pair_cmd->add_subcommand("fuse", "structure equations of the pair algebra");
  add_pair_args(fuse_cmd, pair_args, false);
  fuse_cmd->add_option("--out", pair_args.out, ".fkalg.json output path");

  std::string alg_path;
  auto* algebra_cmd = app.add_subcommand("algebra", "operations on a fusion rule algebra file");
  algebra_cmd->require_subcommand(1);
  auto* equations_cmd = algebra_cmd->add_subcommand("equations", "print structure equations");
  equations_cmd->add_option("file", alg_path, ".fkalg.json input")->required();
  auto* normalize_cmd = algebra_cmd->add_subcommand("normalize", "normalize to a hypergroup");
  normalize_cmd->add_option("file", alg_path, ".fkalg.json input")->required();
  normalize_cmd->add_option("--out", out_path, "hypergroup JSON output path");
  auto* join_cmd = algebra_cmd->add_subcommand("join", "join with Z2");
  join_cmd->add_option("file", alg_path, ".fkalg.json input")->required();
  join_cmd->add_option("--out", out_path, ".fkalg.json output path");
  auto* characters_cmd = algebra_cmd->add_subcommand("characters", "fusion rule algebra of the irreducibles of G");
  characters_cmd->add_option("group", spec, "group spec or .fkgroup.json file")->required();
  characters_cmd->add_option("--out", out_path, ".fkalg.json output path");

  PairArgs diagram_args;
  auto* diagram_cmd = app.add_subcommand("diagram", "Frobenius diagram as DOT");
  add_pair_args(diagram_cmd, diagram_args, false);
  diagram_cmd->add_option("--out", diagram_args.out, ".dot output path");
  bool diagram_json = false;
  diagram_cmd->add_flag("--json", diagram_json, "write JSON instead of DOT");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "reference regression suite");
  fixtures_cmd->require_subcommand(1);
  auto* fixtures_run_cmd = fixtures_cmd->add_subcommand("run", "run every reference example and acceptance check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*group_cmd) {
      emit(out_path, serialize(*build_group(spec)), out);
    } else if (*table_cmd) {
      const auto table = character_table(load_group(spec));
      if (out_path.empty()) out << character_table_text(*table);
      else write_file(out_path, serialize(*table));
    } else if (*check_cmd) {
      return pair_check(pair_args, tol, out);
    } else if (*fuse_cmd) {
      return pair_fuse(pair_args, tol, out);
    } else if (*equations_cmd) {
      out << structure_equations(deserialize_algebra(read_file(alg_path)));
    } else if (*normalize_cmd) {
      const auto f = deserialize_algebra(read_file(alg_path));
      emit(out_path, serialize(normalize_to_hypergroup(f, dimension_function(f, tol), tol)), out);
    } else if (*join_cmd) {
      const auto f = deserialize_algebra(read_file(alg_path));
      emit(out_path, serialize(join(f, dimension_function(f, tol), tol)), out);
    } else if (*characters_cmd) {
      const auto f = character_fusion_algebra(*character_table(load_group(spec)), tol);
      if (out_path.empty()) out << structure_equations(f);
      else write_file(out_path, serialize(f));
    } else if (*diagram_cmd) {
      const auto d = frobenius_diagram(context(diagram_args, tol));
      emit(diagram_args.out, diagram_json ? serialize(d) : emit_dot(d), out);
    } else if (*fixtures_run_cmd) {
      return fixtures_run(tol, out);
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kOk;
}

}  // namespace fusionkit::cli
