#include "fusionkit/character.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>

#include "fusionkit/errors.hpp"

namespace fusionkit {

namespace {

void require_same(const GroupPtr& a, const GroupPtr& b, const char* what) {
  if (!same_group(a, b)) throw Error(ErrorKind::GroupMismatch, std::string(what) + ": class functions on different groups");
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

ClassFunction::ClassFunction(GroupPtr group, std::vector<Complex> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(group_->num_classes()))
    throw Error(ErrorKind::InvalidSpec, "class function needs " + std::to_string(group_->num_classes()) +
                                            " values, got " + std::to_string(values_.size()));
}

ClassFunction ClassFunction::constant(GroupPtr group, Complex value) {
  const auto k = static_cast<std::size_t>(group->num_classes());
  return ClassFunction(std::move(group), std::vector<Complex>(k, value));
}

ClassFunction ClassFunction::regular(GroupPtr group) {
  std::vector<Complex> v(static_cast<std::size_t>(group->num_classes()), 0.0);
  v[0] = static_cast<double>(group->order());
  return ClassFunction(std::move(group), std::move(v));
}

ClassFunction ClassFunction::conjugated() const {
  std::vector<Complex> v = values_;
  for (auto& x : v) x = std::conj(x);
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::scaled(Complex factor) const {
  std::vector<Complex> v = values_;
  for (auto& x : v) x *= factor;
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::plus(const ClassFunction& other) const {
  require_same(group_, other.group_, "plus");
  std::vector<Complex> v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.values_[i];
  return ClassFunction(group_, std::move(v));
}

bool ClassFunction::approx_equal(const ClassFunction& other, double eps) const {
  if (!same_group(group_, other.group_)) return false;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (std::abs(values_[i] - other.values_[i]) > eps) return false;
  return true;
}

Character::Character(ClassFunction values, bool irreducible, const Tolerances& tol)
    : function_(std::move(values)), degree_(0), irreducible_(irreducible) {
  const Complex e = function_.at_identity();
  const double r = std::round(e.real());
  if (std::abs(e - Complex(r, 0.0)) > tol.integral || r < 1)
    throw Error(ErrorKind::NotIntegral, "character value at the identity is not a positive integer: " +
                                            format_value(e.real()));
  degree_ = static_cast<int>(r);
}

CharacterTable::CharacterTable(GroupPtr group, std::vector<Character> irreducibles)
    : group_(std::move(group)), irreducibles_(std::move(irreducibles)) {}

std::vector<int> CharacterTable::degrees() const {
  std::vector<int> d;
  d.reserve(irreducibles_.size());
  for (const auto& c : irreducibles_) d.push_back(c.degree());
  return d;
}

int CharacterTable::find(const ClassFunction& f, double eps) const {
  for (std::size_t i = 0; i < irreducibles_.size(); ++i)
    if (irreducibles_[i].function().approx_equal(f, eps)) return static_cast<int>(i);
  return -1;
}

int CharacterTable::conjugate_index(int i, double eps) const {
  return find(irreducibles_[static_cast<std::size_t>(i)].function().conjugated(), eps);
}

Complex inner_product(const ClassFunction& f, const ClassFunction& h) {
  require_same(f.group(), h.group(), "inner_product");
  const FiniteGroup& g = *f.group();
  Complex sum = 0.0;
  for (int c = 0; c < g.num_classes(); ++c)
    sum += static_cast<double>(g.class_size(c)) * f.at_class(c) * std::conj(h.at_class(c));
  return sum / static_cast<double>(g.order());
}

ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b) {
  require_same(a.group(), b.group(), "pointwise_product");
  std::vector<Complex> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values()[i] * b.values()[i];
  return ClassFunction(a.group(), std::move(v));
}

ClassFunction restrict_to(const ClassFunction& f, const SubgroupEmbedding& sub) {
  require_same(f.group(), sub.parent(), "restrict");
  const FiniteGroup& h = *sub.as_group();
  std::vector<Complex> v(static_cast<std::size_t>(h.num_classes()));
  for (int c = 0; c < h.num_classes(); ++c) {
    const auto& members = h.classes()[static_cast<std::size_t>(c)];
    v[static_cast<std::size_t>(c)] = f(sub.to_parent(members.front()));
#ifndef NDEBUG
    for (int x : members) assert(f(sub.to_parent(x)) == v[static_cast<std::size_t>(c)]);
#endif
  }
  return ClassFunction(sub.as_group(), std::move(v));
}

namespace {

// sum over s in G of f(s g s^-1) for g in each G-class, f zero off H.
std::vector<Complex> conjugation_sums(const ClassFunction& f, const SubgroupEmbedding& sub) {
  require_same(f.group(), sub.as_group(), "induce");
  const FiniteGroup& g = *sub.parent();
  std::vector<Complex> v(static_cast<std::size_t>(g.num_classes()), 0.0);
  for (int c = 0; c < g.num_classes(); ++c) {
    const int x = g.classes()[static_cast<std::size_t>(c)].front();
    Complex sum = 0.0;
    for (int s = 0; s < g.order(); ++s)
      if (auto y = sub.from_parent(g.conjugate(s, x))) sum += f(*y);
    v[static_cast<std::size_t>(c)] = sum;
  }
  return v;
}

}  // namespace

ClassFunction induce(const ClassFunction& f, const SubgroupEmbedding& sub) {
  auto v = conjugation_sums(f, sub);
  for (auto& x : v) x /= static_cast<double>(sub.order());
  return ClassFunction(sub.parent(), std::move(v));
}

ClassFunction induce_average(const ClassFunction& f, const SubgroupEmbedding& sub) {
  auto v = conjugation_sums(f, sub);
  for (auto& x : v) x /= static_cast<double>(sub.parent()->order());
  return ClassFunction(sub.parent(), std::move(v));
}

std::vector<Complex> decompose_raw(const ClassFunction& f, const CharacterTable& table) {
  require_same(f.group(), table.group(), "decompose");
  std::vector<Complex> m;
  m.reserve(table.size());
  for (const auto& chi : table.irreducibles()) m.push_back(inner_product(f, chi.function()));
  return m;
}

std::vector<std::int64_t> decompose(const ClassFunction& f, const CharacterTable& table, const Tolerances& tol) {
  const auto raw = decompose_raw(f, table);
  std::vector<std::int64_t> m(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double r = std::round(raw[i].real());
    if (std::abs(raw[i] - Complex(r, 0.0)) > tol.integral)
      throw Error(ErrorKind::NotIntegral, "multiplicity of irreducible " + std::to_string(i) + " is " +
                                              format_value(raw[i].real()) + (raw[i].imag() != 0.0 ? "+" + format_value(raw[i].imag()) + "i" : "") +
                                              ", not an integer");
    if (r < 0)
      throw Error(ErrorKind::NotNonnegative,
                  "multiplicity of irreducible " + std::to_string(i) + " is negative: " + format_value(r));
    m[i] = static_cast<std::int64_t>(r);
  }
  ClassFunction rebuilt = ClassFunction::constant(f.group(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) rebuilt = rebuilt.plus(table[i].function().scaled(static_cast<double>(m[i])));
  if (!rebuilt.approx_equal(f, tol.eq * std::max(1.0, std::abs(f.at_identity()))))
    throw Error(ErrorKind::NumericalFailure, "decomposition does not reconstruct the class function");
  return m;
}

FrobeniusMultiplicity frobenius_multiplicity(const SubgroupEmbedding& sub, const Character& tau,
                                             const Character& pi, const Tolerances& tol) {
  FrobeniusMultiplicity out;
  const Complex a = inner_product(induce(tau.function(), sub), pi.function());
  const Complex b = inner_product(tau.function(), restrict_to(pi.function(), sub));
  out.via_induce = a.real();
  out.via_restrict = b.real();
  const double ra = std::round(a.real());
  const double rb = std::round(b.real());
  if (std::abs(a - Complex(ra, 0.0)) > tol.integral || std::abs(b - Complex(rb, 0.0)) > tol.integral || ra != rb ||
      ra < 0)
    throw Error(ErrorKind::ReciprocityViolation, "induction gives " + format_value(a.real()) +
                                                     ", restriction gives " + format_value(b.real()));
  out.multiplicity = static_cast<std::int64_t>(ra);
  return out;
}

}  // namespace fusionkit
