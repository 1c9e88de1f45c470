#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "boxspec/cuboid.hpp"

namespace boxspec {

using IndexTriple = std::array<std::int64_t, 3>;

/// Relative gap below which two eigenvalues are treated as one degenerate value.
inline constexpr double kDegeneracyTolerance = 1e-9;

/// One eigenvalue together with every mode (i1, i2, i3) attaining it.
struct SpectralPoint {
  double value = 0.0;
  /// Lexicographically sorted, never empty.
  std::vector<IndexTriple> indices;

  std::size_t multiplicity() const { return indices.size(); }
};

/// Work caps for the k-th eigenvalue search.
struct SpectrumLimits {
  /// Upper bound on the number of (i1, i2) slices one count may visit.
  double max_slices = 4e9;
  /// Upper bound on candidates materialised in the final shell.
  std::int64_t max_candidates = std::int64_t{1} << 24;
};

/// pi^2 (i1^2/a1^2 + i2^2/a2^2 + i3^2/a3^2); indices must be >= 1.
double eigenvalue_of_index(const Cuboid& box, std::int64_t i1, std::int64_t i2,
                           std::int64_t i3);

/// N(lambda): eigenvalues <= lambda counted with multiplicity, boundary inclusive
/// up to kCountTolerance. The unit cube takes an all-integer path.
std::int64_t count_upto(const Cuboid& box, double lambda);

/// lambda_k with its degenerate mode set. Throws ResourceLimit when the search
/// would exceed `limits`.
SpectralPoint kth_eigenvalue(const Cuboid& box, std::int64_t k,
                             const SpectrumLimits& limits = {});

/// Same value as kth_eigenvalue(box, k).value without collecting the modes.
double kth_eigenvalue_value(const Cuboid& box, std::int64_t k,
                            const SpectrumLimits& limits = {});

/// Distinct eigenvalues covering lambda_1 .. lambda_k in increasing order.
std::vector<SpectralPoint> lowest_eigenvalues(const Cuboid& box, std::int64_t k,
                                              const SpectrumLimits& limits = {});

/// 3 pi^2 k^2, an upper bound for lambda_k of the unit cube.
double cube_upper_bound(std::int64_t k);

}  // namespace boxspec
