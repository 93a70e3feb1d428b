#include <cmath>
#include <tuple>

#include "fusionkit/errors.hpp"
#include "fusionkit/fusion.hpp"

namespace fusionkit {

namespace {

// Cheap invariants a basis bijection must preserve.
using Signature = std::tuple<BasisLabel::Tag, bool, std::int64_t, std::int64_t, std::size_t, long long>;

std::vector<Signature> signatures(const FusionAlgebra& f) {
  std::vector<double> d;
  try {
    d = dimension_function(f).values;
  } catch (const Error&) {
    // Not a fusion algebra; prune without dimensions.
  }
  std::vector<Signature> out;
  for (int i = 0; i < f.rank(); ++i) {
    std::int64_t square = 0;
    std::int64_t row = 0;
    for (auto [k, a] : f.product(i, i)) square += a;
    for (int j = 0; j < f.rank(); ++j)
      for (auto [k, a] : f.product(i, j)) row += a;
    const long long dim = d.empty() ? 0 : std::llround(d[static_cast<std::size_t>(i)] * 1e6);
    out.emplace_back(f.label(i).tag, f.involution(i) == i, square, row, f.product(i, i).size(), dim);
  }
  return out;
}

class Search {
 public:
  Search(const FusionAlgebra& a, const FusionAlgebra& b)
      : a_(a), b_(b), ta_(a.dense()), tb_(b.dense()), sa_(signatures(a)), sb_(signatures(b)) {}

  std::optional<std::vector<int>> run() {
    const int n = a_.rank();
    if (n != b_.rank() || a_.involution(0) != 0 || b_.involution(0) != 0 || sa_[0] != sb_[0]) return std::nullopt;
    sigma_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), false);
    sigma_[0] = 0;
    used_[0] = true;
    if (!consistent(0) || !extend(1)) return std::nullopt;
    return sigma_;
  }

 private:
  std::int64_t at(const std::vector<std::int64_t>& t, int i, int j, int k) const {
    const auto n = static_cast<std::size_t>(a_.rank());
    return t[(static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n + static_cast<std::size_t>(k)];
  }

  int s(int i) const { return sigma_[static_cast<std::size_t>(i)]; }

  // Every constraint whose indices are all <= i and involve i.
  bool consistent(int i) const {
    const int ii = a_.involution(i);
    if (ii <= i && b_.involution(s(i)) != s(ii)) return false;
    for (int x = 0; x <= i; ++x)
      for (int y = 0; y <= i; ++y)
        for (int z = 0; z <= i; ++z) {
          if (x != i && y != i && z != i) continue;
          if (at(ta_, x, y, z) != at(tb_, s(x), s(y), s(z))) return false;
        }
    return true;
  }

  bool extend(int i) {
    const int n = a_.rank();
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used_[static_cast<std::size_t>(c)] || sa_[static_cast<std::size_t>(i)] != sb_[static_cast<std::size_t>(c)])
        continue;
      sigma_[static_cast<std::size_t>(i)] = c;
      used_[static_cast<std::size_t>(c)] = true;
      if (consistent(i) && extend(i + 1)) return true;
      used_[static_cast<std::size_t>(c)] = false;
      sigma_[static_cast<std::size_t>(i)] = -1;
    }
    return false;
  }

  const FusionAlgebra& a_;
  const FusionAlgebra& b_;
  std::vector<std::int64_t> ta_, tb_;
  std::vector<Signature> sa_, sb_;
  std::vector<int> sigma_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> algebra_isomorphic(const FusionAlgebra& a, const FusionAlgebra& b) {
  return Search(a, b).run();
}

}  // namespace fusionkit
