#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>

#include <Eigen/Dense>

#include "fusionkit/character.hpp"
#include "fusionkit/errors.hpp"
#include "fusionkit/kernels.hpp"

namespace fusionkit {

namespace {

constexpr int kAttempts = 20;
constexpr int kMaxSplitDepth = 8;
constexpr double kSnap = 1e-10;

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

class CentralCharacterSolver {
 public:
  CentralCharacterSolver(const FiniteGroup& g, std::mt19937& rng) : g_(g), rng_(rng) {}

  // Common eigenvectors of all class matrices, one per irreducible, or
  // nullopt when some eigenspace could not be split.
  std::optional<std::vector<Vector>> solve() {
    found_.clear();
    const int k = g_.num_classes();
    if (!split(Matrix::Identity(k, k), 0)) return std::nullopt;
    return found_;
  }

 private:
  Matrix random_class_matrix() {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> w(static_cast<std::size_t>(g_.num_classes()));
    for (auto& x : w) x = dist(rng_);
    const auto flat = kernels::parallel::class_matrix(g_, w);
    const int k = g_.num_classes();
    Matrix m(k, k);
    for (int s = 0; s < k; ++s)
      for (int t = 0; t < k; ++t) m(s, t) = flat[static_cast<std::size_t>(s * k + t)];
    return m;
  }

  // `basis` spans an invariant subspace common to all class matrices.
  bool split(const Matrix& basis, int depth) {
    const auto m = basis.cols();
    if (m == 1) {
      found_.push_back(basis.col(0));
      return true;
    }
    if (depth > kMaxSplitDepth) return false;
    const Matrix restricted = basis.adjoint() * random_class_matrix() * basis;
    Eigen::ComplexEigenSolver<Matrix> es(restricted);
    if (es.info() != Eigen::Success) return false;
    const Vector lambda = es.eigenvalues();

    double scale = 1.0;
    for (Eigen::Index i = 0; i < m; ++i) scale = std::max(scale, std::abs(lambda(i)));
    const double tol = 1e-7 * scale;

    // Single-linkage clustering of the eigenvalues.
    std::vector<int> cluster(static_cast<std::size_t>(m), -1);
    int clusters = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (cluster[static_cast<std::size_t>(i)] >= 0) continue;
      std::vector<Eigen::Index> stack{i};
      cluster[static_cast<std::size_t>(i)] = clusters;
      while (!stack.empty()) {
        const auto a = stack.back();
        stack.pop_back();
        for (Eigen::Index b = 0; b < m; ++b)
          if (cluster[static_cast<std::size_t>(b)] < 0 && std::abs(lambda(a) - lambda(b)) < tol) {
            cluster[static_cast<std::size_t>(b)] = clusters;
            stack.push_back(b);
          }
      }
      ++clusters;
    }

    for (int c = 0; c < clusters; ++c) {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index i = 0; i < m; ++i)
        if (cluster[static_cast<std::size_t>(i)] == c) idx.push_back(i);
      Matrix vectors(basis.rows(), static_cast<Eigen::Index>(idx.size()));
      for (std::size_t j = 0; j < idx.size(); ++j)
        vectors.col(static_cast<Eigen::Index>(j)) = basis * es.eigenvectors().col(idx[j]);
      if (idx.size() == 1) {
        found_.push_back(vectors.col(0));
        continue;
      }
      Eigen::HouseholderQR<Matrix> qr(vectors);
      const Matrix q = qr.householderQ() * Matrix::Identity(basis.rows(), vectors.cols());
      if (!split(q, depth + 1)) return false;
    }
    return true;
  }

  const FiniteGroup& g_;
  std::mt19937& rng_;
  std::vector<Vector> found_;
};

double snap(double x) {
  const double r = std::round(x);
  // + 0.0 turns a snapped -0 into 0.
  return std::abs(x - r) < kSnap ? r + 0.0 : x + 0.0;
}

// Character values from a common eigenvector v with v_t proportional to the
// central character on class t.
std::optional<std::vector<Complex>> character_from_central(const FiniteGroup& g, const Vector& v) {
  if (std::abs(v(0)) < 1e-8 * v.norm()) return std::nullopt;
  const Vector omega = v / v(0);
  double norm = 0;
  for (int r = 0; r < g.num_classes(); ++r) norm += std::norm(omega(r)) / g.class_size(r);
  const double d_real = std::sqrt(static_cast<double>(g.order()) / norm);
  const double d = std::round(d_real);
  if (d < 1 || std::abs(d_real - d) > 1e-4) return std::nullopt;
  std::vector<Complex> values(static_cast<std::size_t>(g.num_classes()));
  for (int r = 0; r < g.num_classes(); ++r) {
    const Complex x = d * omega(r) / static_cast<double>(g.class_size(r));
    values[static_cast<std::size_t>(r)] = Complex(snap(x.real()), snap(x.imag()));
  }
  return values;
}

bool orthonormal(const FiniteGroup& g, const std::vector<std::vector<Complex>>& rows, double eps) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) {
      Complex s = 0.0;
      for (int c = 0; c < g.num_classes(); ++c)
        s += static_cast<double>(g.class_size(c)) * rows[i][static_cast<std::size_t>(c)] *
             std::conj(rows[j][static_cast<std::size_t>(c)]);
      s /= static_cast<double>(g.order());
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > eps) return false;
    }
  return true;
}

// Trivial first, then ascending degree, then values in class order (real
// part, then imaginary part).
bool row_before(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  constexpr double eps = 1e-9;
  auto is_trivial = [](const std::vector<Complex>& r) {
    return std::all_of(r.begin(), r.end(), [](Complex x) { return std::abs(x - 1.0) < eps; });
  };
  const bool ta = is_trivial(a);
  const bool tb = is_trivial(b);
  if (ta != tb) return ta;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (std::abs(a[c].real() - b[c].real()) > eps) return a[c].real() < b[c].real();
    if (std::abs(a[c].imag() - b[c].imag()) > eps) return a[c].imag() < b[c].imag();
  }
  return false;
}

std::optional<std::vector<std::vector<Complex>>> attempt(const FiniteGroup& g, std::mt19937& rng) {
  CentralCharacterSolver solver(g, rng);
  auto vectors = solver.solve();
  if (!vectors || vectors->size() != static_cast<std::size_t>(g.num_classes())) return std::nullopt;
  std::vector<std::vector<Complex>> rows;
  long long degree_squares = 0;
  for (const auto& v : *vectors) {
    auto row = character_from_central(g, v);
    if (!row) return std::nullopt;
    const auto d = static_cast<long long>(std::llround(row->front().real()));
    degree_squares += d * d;
    rows.push_back(std::move(*row));
  }
  if (degree_squares != g.order() || !orthonormal(g, rows, Tolerances{}.eq)) return std::nullopt;
  // Degree is the value on the identity class, so sorting by values in class
  // order already sorts by degree after the trivial row.
  std::sort(rows.begin(), rows.end(), row_before);
  return rows;
}

}  // namespace

CharacterTablePtr compute_character_table(const GroupPtr& group, std::uint32_t seed) {
  std::mt19937 rng(seed);
  for (int i = 0; i < kAttempts; ++i) {
    if (auto rows = attempt(*group, rng)) {
      std::vector<Character> chars;
      chars.reserve(rows->size());
      for (auto& r : *rows) chars.emplace_back(ClassFunction(group, std::move(r)), true);
      return std::make_shared<const CharacterTable>(group, std::move(chars));
    }
  }
  throw Error(ErrorKind::NumericalFailure, "character table: eigensolver failed to separate characters after " +
                                               std::to_string(kAttempts) + " attempts");
}

CharacterTablePtr character_table(const GroupPtr& group) {
  static std::mutex mutex;
  static std::map<const FiniteGroup*, CharacterTablePtr> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(group.get()); it != cache.end()) return it->second;
  }
  auto table = compute_character_table(group, 0x5eedu);
  std::lock_guard lock(mutex);
  // The cached table keeps its group alive, so the key stays valid.
  return cache.emplace(group.get(), std::move(table)).first->second;
}

}  // namespace fusionkit
