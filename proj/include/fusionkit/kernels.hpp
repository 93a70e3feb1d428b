#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::parallel` with
// identical results; the library calls the parallel versions and the tests
// compare the two.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace fusionkit {
class FiniteGroup;
}

namespace fusionkit::kernels {

using Predicate = std::function<bool(std::size_t)>;

namespace serial {

/// First (a, b, c) in lexicographic order with (ab)c != a(bc).
std::optional<std::array<int, 3>> cayley_associativity_violation(std::span<const std::uint16_t> table,
                                                                  int order);

/// Row-major k x k matrix of the weighted class
/// algebra operator: A[s][t] = sum over x in G of weights[class(x)] when
/// x^-1 z_t lies in class s, z_t the first member of class t. With a unit
/// weight on class r this is the class multiplication matrix of C_r.
std::vector<double> class_matrix(const FiniteGroup& group, std::span<const double> class_weights);

/// Lowest index in [0, count) for which `holds` is false.
std::optional<std::size_t> first_violation(std::size_t count, const Predicate& holds);

/// First (i, j, k, l) with sum_s a[i][j][s] a[s][k][l] != sum_t a[j][k][t] a[i][t][l]
/// for a dense b x b x b tensor.
std::optional<std::array<int, 4>> tensor_associativity_violation(std::span<const std::int64_t> tensor,
                                                                  int rank);

}  // namespace serial

namespace parallel {

std::optional<std::array<int, 3>> cayley_associativity_violation(std::span<const std::uint16_t> table,
                                                                  int order);
std::vector<double> class_matrix(const FiniteGroup& group, std::span<const double> class_weights);
/// Deterministic: returns the same index as the serial version. `holds` must
/// be safe to call concurrently.
std::optional<std::size_t> first_violation(std::size_t count, const Predicate& holds);
std::optional<std::array<int, 4>> tensor_associativity_violation(std::span<const std::int64_t> tensor,
                                                                  int rank);

}  // namespace parallel

}  // namespace fusionkit::kernels
