#include "fusionkit/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Dense>

#include "fusionkit/errors.hpp"
#include "fusionkit/kernels.hpp"

namespace fusionkit {

namespace {

std::size_t idx3(int n, int i, int j, int k) {
  const auto b = static_cast<std::size_t>(n);
  return (static_cast<std::size_t>(i) * b + static_cast<std::size_t>(j)) * b + static_cast<std::size_t>(k);
}

std::string tuple_text(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

AxiomCheck failed(std::string axiom, std::vector<int> at, std::string detail) {
  return AxiomCheck{std::move(axiom), false, std::move(at), std::move(detail)};
}

AxiomCheck passed(std::string axiom) { return AxiomCheck{std::move(axiom), true, {}, {}}; }

bool involution_is_valid(const std::vector<int>& inv) {
  const int n = static_cast<int>(inv.size());
  if (n == 0 || inv[0] != 0) return false;
  for (int i = 0; i < n; ++i) {
    const int j = inv[static_cast<std::size_t>(i)];
    if (j < 0 || j >= n || inv[static_cast<std::size_t>(j)] != i) return false;
  }
  return true;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string_view to_string(BasisLabel::Tag tag) {
  switch (tag) {
    case BasisLabel::Tag::Circle: return "circle";
    case BasisLabel::Tag::Bullet: return "bullet";
    case BasisLabel::Tag::Abstract: return "abstract";
  }
  return "abstract";
}

FusionAlgebra::FusionAlgebra(std::vector<BasisLabel> basis, std::vector<int> involution,
                             std::vector<std::vector<Product>> products)
    : basis_(std::move(basis)), involution_(std::move(involution)), products_(std::move(products)) {
  const auto n = basis_.size();
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "fusion algebra needs at least the unit");
  if (involution_.size() != n) throw Error(ErrorKind::InvalidSpec, "involution has wrong length");
  for (int v : involution_)
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error(ErrorKind::InvalidSpec, "involution index out of range");
  if (products_.size() != n) throw Error(ErrorKind::InvalidSpec, "product table has wrong number of rows");
  for (auto& row : products_) {
    if (row.size() != n) throw Error(ErrorKind::InvalidSpec, "product table row has wrong length");
    for (auto& p : row) {
      std::map<int, std::int64_t> merged;
      for (auto [k, a] : p) {
        if (k < 0 || static_cast<std::size_t>(k) >= n) throw Error(ErrorKind::InvalidSpec, "product index out of range");
        merged[k] += a;
      }
      p.clear();
      for (auto [k, a] : merged)
        if (a != 0) p.emplace_back(k, a);
    }
  }
}

FusionAlgebra FusionAlgebra::from_dense(std::vector<BasisLabel> basis, std::vector<int> involution,
                                        const std::vector<std::int64_t>& tensor) {
  const int n = static_cast<int>(basis.size());
  if (tensor.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw Error(ErrorKind::InvalidSpec, "dense tensor has wrong size");
  std::vector<std::vector<Product>> products(static_cast<std::size_t>(n), std::vector<Product>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (auto a = tensor[idx3(n, i, j, k)]; a != 0)
          products[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].emplace_back(k, a);
  return FusionAlgebra(std::move(basis), std::move(involution), std::move(products));
}

std::int64_t FusionAlgebra::coefficient(int i, int j, int k) const {
  for (auto [kk, a] : product(i, j))
    if (kk == k) return a;
  return 0;
}

std::vector<std::int64_t> FusionAlgebra::dense() const {
  const int n = rank();
  std::vector<std::int64_t> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto [k, a] : product(i, j)) t[idx3(n, i, j, k)] = a;
  return t;
}

int FusionAlgebra::find(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return static_cast<int>(i);
  return -1;
}

std::string AxiomCheck::message() const {
  if (passed) return axiom + " ok";
  std::string s = axiom + " violated";
  if (!at.empty()) s += " at " + tuple_text(at);
  if (!detail.empty()) s += ": " + detail;
  return s;
}

bool AxiomReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

const AxiomCheck* AxiomReport::find(std::string_view axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return &c;
  return nullptr;
}

AxiomReport check_fusion_axioms(const FusionAlgebra& f) {
  AxiomReport report;
  const int n = f.rank();
  const auto t = f.dense();

  // F1: unit law, then associativity.
  AxiomCheck f1 = passed("F1");
  for (int j = 0; j < n && f1.passed; ++j)
    for (int k = 0; k < n && f1.passed; ++k) {
      const std::int64_t want = j == k ? 1 : 0;
      if (t[idx3(n, 0, j, k)] != want) f1 = failed("F1", {0, j, k}, "unit law");
      else if (t[idx3(n, j, 0, k)] != want) f1 = failed("F1", {j, 0, k}, "unit law");
    }
  if (f1.passed)
    if (auto v = kernels::parallel::tensor_associativity_violation(t, n))
      f1 = failed("F1", {(*v)[0], (*v)[1], (*v)[2], (*v)[3]}, "associativity");
  report.checks.push_back(f1);

  AxiomCheck f2 = passed("F2");
  for (int i = 0; i < n && f2.passed; ++i)
    for (int j = 0; j < n && f2.passed; ++j)
      for (auto [k, a] : f.product(i, j))
        if (a < 0) {
          f2 = failed("F2", {i, j, k}, "negative structure constant " + std::to_string(a));
          break;
        }
  report.checks.push_back(f2);

  AxiomCheck f3 = passed("F3");
  if (!involution_is_valid(f.involutions())) {
    f3 = failed("F3", {}, "involution must be an involutive permutation fixing the unit");
  } else {
    for (int i = 0; i < n && f3.passed; ++i)
      for (int j = 0; j < n && f3.passed; ++j) {
        const std::int64_t a = t[idx3(n, i, j, 0)];
        const std::int64_t want = j == f.involution(i) ? 1 : 0;
        if (a != want)
          f3 = failed("F3", {i, j, 0}, "unit coefficient " + std::to_string(a) + ", expected " + std::to_string(want));
      }
  }
  report.checks.push_back(f3);

  AxiomCheck star = passed("involution");
  if (involution_is_valid(f.involutions())) {
    for (int i = 0; i < n && star.passed; ++i)
      for (int j = 0; j < n && star.passed; ++j)
        for (int k = 0; k < n; ++k)
          if (t[idx3(n, i, j, k)] != t[idx3(n, f.involution(j), f.involution(i), f.involution(k))]) {
            star = failed("involution", {i, j, k}, "not an anti-automorphism");
            break;
          }
  } else {
    star = failed("involution", {}, "not an involutive permutation fixing the unit");
  }
  report.checks.push_back(star);
  return report;
}

DimensionFunction dimension_function(const FusionAlgebra& f, const Tolerances& tol) {
  const int n = f.rank();
  DimensionFunction d;
  d.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j)
      for (auto [k, a] : f.product(i, j)) m(j, k) = static_cast<double>(a);
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    if (es.info() != Eigen::Success)
      throw Error(ErrorKind::NoPositiveSolution, "eigensolver failed for " + f.label(i).name);
    double best = -1;
    for (Eigen::Index e = 0; e < n; ++e) best = std::max(best, es.eigenvalues()(e).real());
    if (!(best > 0)) throw Error(ErrorKind::NoPositiveSolution, "no positive eigenvalue for " + f.label(i).name);
    d.values[static_cast<std::size_t>(i)] = best;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double rhs = 0;
      for (auto [k, a] : f.product(i, j)) rhs += static_cast<double>(a) * d[k];
      const double lhs = d[i] * d[j];
      if (std::abs(lhs - rhs) > tol.eq * std::max(1.0, lhs))
        throw Error(ErrorKind::NoPositiveSolution, "d(" + f.label(i).name + ") d(" + f.label(j).name + ") = " +
                                                       fmt(lhs) + " but the product expands to " + fmt(rhs));
    }
  return d;
}

std::vector<double> haar_element(const FusionAlgebra& f, const DimensionFunction& d, const Tolerances& tol) {
  const int n = f.rank();
  std::vector<double> r = d.values;
  for (int i = 0; i < n; ++i) {
    std::vector<double> prod(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < n; ++k)
      for (auto [l, a] : f.product(i, k)) prod[static_cast<std::size_t>(l)] += static_cast<double>(a) * r[static_cast<std::size_t>(k)];
    for (int l = 0; l < n; ++l) {
      const double want = d[i] * r[static_cast<std::size_t>(l)];
      if (std::abs(prod[static_cast<std::size_t>(l)] - want) > tol.eq * std::max(1.0, want))
        throw Error(ErrorKind::HaarViolation, f.label(i).name + " R differs from d(" + f.label(i).name +
                                                  ") R at " + f.label(l).name + ": " +
                                                  fmt(prod[static_cast<std::size_t>(l)]) + " vs " + fmt(want));
    }
  }
  return r;
}

Hypergroup::Hypergroup(std::vector<BasisLabel> basis, std::vector<int> involution, std::vector<double> coefficients,
                       std::vector<double> weights)
    : basis_(std::move(basis)),
      involution_(std::move(involution)),
      coefficients_(std::move(coefficients)),
      weights_(std::move(weights)) {
  const auto n = basis_.size();
  if (n == 0 || involution_.size() != n || weights_.size() != n || coefficients_.size() != n * n * n)
    throw Error(ErrorKind::InvalidSpec, "hypergroup data has inconsistent sizes");
  for (int v : involution_)
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error(ErrorKind::InvalidSpec, "involution index out of range");
}

AxiomReport check_hypergroup_axioms(const Hypergroup& h, const Tolerances& tol) {
  AxiomReport report;
  const int n = h.rank();
  const double eps = tol.eq;

  AxiomCheck h1 = passed("H1");
  for (int j = 0; j < n && h1.passed; ++j)
    for (int k = 0; k < n && h1.passed; ++k) {
      const double want = j == k ? 1.0 : 0.0;
      if (std::abs(h.coefficient(0, j, k) - want) > eps || std::abs(h.coefficient(j, 0, k) - want) > eps)
        h1 = failed("H1", {0, j, k}, "unit law");
    }
  if (h1.passed) {
    const auto bad = kernels::parallel::first_violation(
        static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n), [&](std::size_t ijk) {
          const auto b = static_cast<std::size_t>(n);
          const int i = static_cast<int>(ijk / (b * b));
          const int j = static_cast<int>((ijk / b) % b);
          const int k = static_cast<int>(ijk % b);
          for (int l = 0; l < n; ++l) {
            double left = 0;
            double right = 0;
            for (int s = 0; s < n; ++s) {
              left += h.coefficient(i, j, s) * h.coefficient(s, k, l);
              right += h.coefficient(j, k, s) * h.coefficient(i, s, l);
            }
            if (std::abs(left - right) > eps) return false;
          }
          return true;
        });
    if (bad) {
      const auto b = static_cast<std::size_t>(n);
      h1 = failed("H1", {static_cast<int>(*bad / (b * b)), static_cast<int>((*bad / b) % b), static_cast<int>(*bad % b)},
                  "associativity");
    }
  }
  report.checks.push_back(h1);

  AxiomCheck h2 = passed("H2");
  for (int i = 0; i < n && h2.passed; ++i)
    for (int j = 0; j < n && h2.passed; ++j) {
      double sum = 0;
      for (int k = 0; k < n; ++k) {
        const double c = h.coefficient(i, j, k);
        if (c < -eps) {
          h2 = failed("H2", {i, j, k}, "negative coefficient " + fmt(c));
          break;
        }
        sum += c;
      }
      if (h2.passed && std::abs(sum - 1.0) > eps) h2 = failed("H2", {i, j}, "coefficients sum to " + fmt(sum));
    }
  report.checks.push_back(h2);

  AxiomCheck h3 = passed("H3");
  if (!involution_is_valid(h.involutions())) {
    h3 = failed("H3", {}, "involution must be an involutive permutation fixing the unit");
  } else {
    for (int i = 0; i < n && h3.passed; ++i)
      for (int j = 0; j < n && h3.passed; ++j) {
        const bool nonzero = h.coefficient(i, j, 0) > eps;
        if (nonzero != (j == h.involution(i))) h3 = failed("H3", {i, j, 0}, "unit coefficient support");
      }
  }
  report.checks.push_back(h3);

  AxiomCheck w = passed("weights");
  for (int i = 0; i < n && w.passed; ++i) {
    const double c = h.coefficient(i, h.involution(i), 0);
    const double want = c > 0 ? 1.0 / c : 0.0;
    const double got = h.weights()[static_cast<std::size_t>(i)];
    if (!(c > 0) || std::abs(got - want) > eps * std::max(1.0, want))
      w = failed("weights", {i}, "weight " + fmt(got) + ", expected " + fmt(want));
  }
  report.checks.push_back(w);
  return report;
}

Hypergroup normalize_to_hypergroup(const FusionAlgebra& f, const DimensionFunction& d, const Tolerances& tol) {
  const int n = f.rank();
  if (d.values.size() != static_cast<std::size_t>(n))
    throw Error(ErrorKind::NoPositiveSolution, "dimension function has wrong length");
  for (double v : d.values)
    if (!(v > 0)) throw Error(ErrorKind::NoPositiveSolution, "dimension values must be positive");
  std::vector<double> c(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto [k, a] : f.product(i, j)) c[idx3(n, i, j, k)] = static_cast<double>(a) * d[k] / (d[i] * d[j]);
  std::vector<double> weights(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) weights[static_cast<std::size_t>(i)] = d[i] * d[i];
  Hypergroup h(f.basis(), f.involutions(), std::move(c), std::move(weights));
  const auto report = check_hypergroup_axioms(h, tol);
  if (const auto* bad = report.first_failure()) throw Error(ErrorKind::NoPositiveSolution, bad->message());
  return h;
}

FusionAlgebra join(const FusionAlgebra& f, const DimensionFunction& d, const Tolerances& tol) {
  const int n = f.rank();
  std::vector<std::int64_t> di(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double r = std::round(d[i]);
    if (std::abs(d[i] - r) > tol.integral || r < 1)
      throw Error(ErrorKind::NonIntegralDimensions,
                  "join needs integral dimensions; d(" + f.label(i).name + ") = " + fmt(d[i]));
    di[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(r);
  }
  auto basis = f.basis();
  basis.push_back(BasisLabel{BasisLabel::Tag::Bullet, 0, "Y1"});
  auto inv = f.involutions();
  inv.push_back(n);
  const auto m = static_cast<std::size_t>(n + 1);
  std::vector<std::vector<FusionAlgebra::Product>> p(m, std::vector<FusionAlgebra::Product>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f.product(i, j);
    p[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = {{n, di[static_cast<std::size_t>(i)]}};
    p[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] = {{n, di[static_cast<std::size_t>(i)]}};
  }
  for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)].emplace_back(k, di[static_cast<std::size_t>(k)]);
  FusionAlgebra out(std::move(basis), std::move(inv), std::move(p));
  if (const auto* bad = check_fusion_axioms(out).first_failure())
    throw Error(ErrorKind::InternalInconsistency, "join is not a fusion rule algebra: " + bad->message());
  return out;
}

FusionAlgebra direct_product_with_z2(const FusionAlgebra& f) {
  const int n = f.rank();
  std::vector<BasisLabel> basis = f.basis();
  for (int i = 0; i < n; ++i) {
    BasisLabel odd = f.label(i);
    if (odd.tag == BasisLabel::Tag::Circle) odd.tag = BasisLabel::Tag::Bullet;
    odd.name += "'";
    basis.push_back(std::move(odd));
  }
  std::vector<int> inv(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    inv[static_cast<std::size_t>(i)] = f.involution(i);
    inv[static_cast<std::size_t>(i + n)] = f.involution(i) + n;
  }
  const auto m = static_cast<std::size_t>(2 * n);
  std::vector<std::vector<FusionAlgebra::Product>> p(m, std::vector<FusionAlgebra::Product>(m));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          auto& out = p[static_cast<std::size_t>(i + a * n)][static_cast<std::size_t>(j + b * n)];
          for (auto [k, c] : f.product(i, j)) out.emplace_back(k + ((a + b) % 2) * n, c);
        }
  return FusionAlgebra(std::move(basis), std::move(inv), std::move(p));
}

FusionAlgebra group_algebra(const FiniteGroup& g) {
  const int n = g.order();
  // Identity first so that it is the unit at index 0.
  std::vector<int> order;
  order.push_back(g.identity());
  for (int x = 0; x < n; ++x)
    if (x != g.identity()) order.push_back(x);
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<BasisLabel> basis;
  std::vector<int> inv;
  std::vector<std::vector<FusionAlgebra::Product>> p(static_cast<std::size_t>(n),
                                                     std::vector<FusionAlgebra::Product>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    const int x = order[static_cast<std::size_t>(i)];
    basis.push_back(BasisLabel{BasisLabel::Tag::Abstract, -1, g.label(x)});
    inv.push_back(pos[static_cast<std::size_t>(g.inverse(x))]);
    for (int j = 0; j < n; ++j)
      p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {
          {pos[static_cast<std::size_t>(g.multiply(x, order[static_cast<std::size_t>(j)]))], 1}};
  }
  return FusionAlgebra(std::move(basis), std::move(inv), std::move(p));
}

FusionAlgebra character_fusion_algebra(const CharacterTable& table, const Tolerances& tol) {
  const int n = static_cast<int>(table.size());
  std::vector<BasisLabel> basis;
  std::vector<int> inv;
  for (int i = 0; i < n; ++i) {
    basis.push_back(BasisLabel{BasisLabel::Tag::Circle, i, "γ" + std::to_string(i)});
    const int c = table.conjugate_index(i, tol.eq);
    if (c < 0) throw Error(ErrorKind::InternalInconsistency, "conjugate of an irreducible is not in the table");
    inv.push_back(c);
  }
  std::vector<std::vector<FusionAlgebra::Product>> p(static_cast<std::size_t>(n),
                                                     std::vector<FusionAlgebra::Product>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto m = decompose(pointwise_product(table[static_cast<std::size_t>(i)].function(),
                                                 table[static_cast<std::size_t>(j)].function()),
                               table, tol);
      for (int k = 0; k < n; ++k)
        if (m[static_cast<std::size_t>(k)] != 0)
          p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].emplace_back(k, m[static_cast<std::size_t>(k)]);
    }
  return FusionAlgebra(std::move(basis), std::move(inv), std::move(p));
}

}  // namespace fusionkit
