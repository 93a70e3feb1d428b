#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "fusionkit/character.hpp"
#include "fusionkit/errors.hpp"
#include "oracles.hpp"

using namespace fusionkit;

namespace {

constexpr double kEps = 1e-9;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InternalInconsistency;
}

const char* const kGroups[] = {"Z1", "Z2", "Z5", "S3", "S4", "A4", "D4", "D5", "Z2xZ2", "Z3xS3", "A5",
                               "semidirect(Z3,Z4,inv)", "semidirect(Z7,Z3,perm[0,2,4,6,1,3,5])"};

}  // namespace

TEST_CASE("S3 table") {
  const auto t = character_table(build_group("S3"));
  REQUIRE(t->size() == 3);
  CHECK(t->degrees() == std::vector<int>{1, 1, 2});
  // classes: e, 3-cycles, transpositions
  const auto& sign = (*t)[1].function();
  CHECK(sign.at_class(1).real() == doctest::Approx(1));
  CHECK(sign.at_class(2).real() == doctest::Approx(-1));
  const auto& std2 = (*t)[2].function();
  CHECK(std2.at_class(1).real() == doctest::Approx(-1));
  CHECK(std2.at_class(2).real() == doctest::Approx(0));
}

TEST_CASE("degrees of familiar groups") {
  CHECK(character_table(build_group("S4"))->degrees() == std::vector<int>{1, 1, 2, 3, 3});
  CHECK(character_table(build_group("A4"))->degrees() == std::vector<int>{1, 1, 1, 3});
  CHECK(character_table(build_group("A5"))->degrees() == std::vector<int>{1, 3, 3, 4, 5});
  CHECK(character_table(build_group("D4"))->degrees() == std::vector<int>{1, 1, 1, 1, 2});
}

TEST_CASE("orthogonality, squares of degrees and integrality") {
  for (const char* spec : kGroups) {
    const auto g = build_group(spec);
    const auto t = character_table(g);
    CHECK(static_cast<int>(t->size()) == g->num_classes());
    int squares = 0;
    for (const auto& chi : t->irreducibles()) squares += chi.degree() * chi.degree();
    CHECK_MESSAGE(squares == g->order(), spec);
    std::vector<std::vector<Complex>> rows;
    for (const auto& chi : t->irreducibles()) rows.push_back(oracle::on_elements(chi.function()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j)
        CHECK(std::abs(oracle::inner(rows[i], rows[j]) - Complex(i == j ? 1.0 : 0.0)) < 1e-8);
    // The trivial character comes first.
    for (auto v : (*t)[0].function().values()) CHECK(std::abs(v - Complex(1)) < kEps);
  }
}

TEST_CASE("seeds do not change the table") {
  for (const char* spec : {"S4", "A5", "D5"}) {
    const auto g = build_group(spec);
    const auto a = compute_character_table(g, 1);
    const auto b = compute_character_table(g, 987654321);
    REQUIRE(a->size() == b->size());
    for (std::size_t i = 0; i < a->size(); ++i)
      CHECK((*a)[i].function().approx_equal((*b)[i].function(), 1e-9));
  }
}

TEST_CASE("induction agrees with the transversal formula") {
  const std::vector<std::pair<const char*, std::vector<std::string>>> pairs = {
      {"S3", {"(12)"}}, {"S4", {"(12)"}}, {"S4", {"(1234)"}}, {"A4", {"(123)"}}, {"D4", {"s"}}, {"A5", {"(12345)"}}};
  for (const auto& [spec, gens] : pairs) {
    const auto g = build_group(spec);
    const auto sub = subgroup(g, gens);
    for (const auto& tau : character_table(sub.as_group())->irreducibles()) {
      const auto ours = oracle::on_elements(induce(tau.function(), sub));
      const auto ref = oracle::induce(tau.function(), sub);
      for (std::size_t x = 0; x < ours.size(); ++x) CHECK(std::abs(ours[x] - ref[x]) < kEps);
      const auto avg = oracle::on_elements(induce_average(tau.function(), sub));
      for (std::size_t x = 0; x < ours.size(); ++x) CHECK(std::abs(avg[x] * double(sub.index()) - ref[x]) < kEps);
    }
  }
}

TEST_CASE("restriction is evaluation on members") {
  const auto g = build_group("S4");
  const auto sub = subgroup(g, std::vector<std::string>{"(1234)", "(13)"});
  for (const auto& pi : character_table(g)->irreducibles()) {
    const auto r = restrict_to(pi.function(), sub);
    const auto ref = oracle::restrict(pi.function(), sub);
    for (int y = 0; y < sub.order(); ++y) CHECK(std::abs(r(y) - ref[static_cast<std::size_t>(y)]) < kEps);
  }
}

TEST_CASE("reciprocity multiplicities against element sums") {
  const auto g = build_group("S4");
  for (const auto& gens : std::vector<std::vector<std::string>>{{"(12)"}, {"(12)", "(123)"}, {"(12)(34)", "(13)(24)"}}) {
    const auto sub = subgroup(g, gens);
    for (const auto& tau : character_table(sub.as_group())->irreducibles())
      for (const auto& pi : character_table(g)->irreducibles()) {
        const auto m = frobenius_multiplicity(sub, tau, pi);
        const auto ref = oracle::inner(oracle::induce(tau.function(), sub), oracle::on_elements(pi.function()));
        CHECK(m.multiplicity == std::llround(ref.real()));
        CHECK(std::abs(ref.imag()) < kEps);
        const auto ref2 = oracle::inner(oracle::on_elements(tau.function()), oracle::restrict(pi.function(), sub));
        CHECK(m.multiplicity == std::llround(ref2.real()));
      }
  }
}

TEST_CASE("index-12 induction from a transposition in S4") {
  // ind of the trivial character of <(12)> has degree 12: 1 + 2 + 2*3 + 3.
  const auto g = build_group("S4");
  const auto sub = subgroup(g, std::vector<std::string>{"(12)"});
  const auto t = character_table(g);
  const auto m = decompose(induce((*character_table(sub.as_group()))[0].function(), sub), *t);
  std::int64_t degree = 0;
  for (std::size_t i = 0; i < m.size(); ++i) degree += m[i] * (*t)[i].degree();
  CHECK(degree == 12);
  // Multiplicity of the trivial character of <(12)> in res pi: (pi(e) + pi((12))) / 2.
  const int tr = *g->element("(12)");
  for (std::size_t i = 0; i < m.size(); ++i)
    CHECK(m[i] == std::llround(((*t)[i].function()(g->identity()) + (*t)[i].function()(tr)).real() / 2));
  CHECK(std::count(m.begin(), m.end(), 2) == 1);
}

TEST_CASE("decompose refuses virtual and fractional functions") {
  const auto g = build_group("S3");
  const auto t = character_table(g);
  const auto diff = (*t)[1].function().plus((*t)[0].function().scaled(-1));
  CHECK(kind_of([&] { decompose(diff, *t); }) == ErrorKind::NotNonnegative);
  const auto half = (*t)[2].function().scaled(0.5);
  CHECK(kind_of([&] { decompose(half, *t); }) == ErrorKind::NotIntegral);
  const auto other = character_table(build_group("Z6"));
  CHECK(kind_of([&] { decompose((*other)[0].function(), *t); }) == ErrorKind::GroupMismatch);
  CHECK(decompose(ClassFunction::regular(g), *t) == std::vector<std::int64_t>{1, 1, 2});
}

TEST_CASE("class function guards") {
  const auto g = build_group("S3");
  CHECK(kind_of([&] { ClassFunction(g, {1, 2}); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([&] { Character(ClassFunction::constant(g, 0.5), false); }) == ErrorKind::NotIntegral);
  CHECK(kind_of([&] { Character(ClassFunction::constant(g, -1), false); }) == ErrorKind::NotIntegral);
  const auto z3 = build_group("Z3");
  CHECK(kind_of([&] { inner_product(ClassFunction::constant(g, 1), ClassFunction::constant(z3, 1)); }) ==
        ErrorKind::GroupMismatch);
}

TEST_CASE("conjugate index pairs complex characters") {
  const auto t = character_table(build_group("Z3"));
  CHECK(t->conjugate_index(0, 1e-9) == 0);
  CHECK(t->conjugate_index(1, 1e-9) == 2);
  CHECK(t->conjugate_index(2, 1e-9) == 1);
}
