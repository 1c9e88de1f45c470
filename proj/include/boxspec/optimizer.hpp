#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boxspec/cuboid.hpp"
#include "boxspec/spectrum.hpp"

namespace boxspec {

/// Fundamental domain a1 <= a2 <= a3 = 1/(a1 a2), with a1 floored by the
/// uniform bound on optimal cuboids. Parametrised by the unit square:
/// a1 = a1_lo + u (a1_hi - a1_lo), a2 = a1 + v (a1^{-1/2} - a1).
struct SearchBox {
  double a1_lo;
  double a1_hi = 1.0;

  static SearchBox standard();

  double a2_lo(double a1) const { return a1; }
  double a2_hi(double a1) const;
  bool contains(double a1, double a2, double tol = 1e-12) const;
  std::pair<double, double> from_unit(double u, double v) const;
};

struct OptimizerConfig {
  int grid = 64;             ///< coarse grid points per axis
  int basins = 8;            ///< local grid minima refined by simplex descent
  int max_iter = 500;        ///< simplex iterations per descent
  double side_tol = 1e-9;    ///< stop when the simplex spans less than this in a1 and a2
  int restarts = 2;          ///< fresh simplex restarts from each converged point
  int random_starts = 0;     ///< extra seeded starting points on top of the grid basins
  std::uint64_t seed = 0;
  int threads = 1;           ///< sweep-level worker threads
  SpectrumLimits limits{};
};

struct OptimalRecord {
  std::int64_t k = 0;
  std::optional<Cuboid> cuboid;  ///< empty when the run failed
  double lambda_star = 0.0;
  double delta = 0.0;            ///< a3 - 1
  std::int64_t evaluations = 0;
  int restarts_agreeing = 0;     ///< basins that reached lambda_star within 1e-8 relative
  bool unique_within_tol = true;
  std::string status = "ok";     ///< "ok", "max_iter" or "error: ..."

  bool converged() const { return status == "ok"; }
};

/// lambda_k of the unit-volume cuboid (a1, a2, 1/(a1 a2)); (a1, a2) must lie in the search box.
double objective(std::int64_t k, double a1, double a2, const SpectrumLimits& limits = {});

OptimalRecord optimize_k(std::int64_t k, const OptimizerConfig& config = {});

/// One record per k in input order; failures are captured per record.
std::vector<OptimalRecord> sweep(std::span<const std::int64_t> ks, const OptimizerConfig& config = {});

/// 1, 2, 4, ... restricted to [k_min, k_max].
std::vector<std::int64_t> dyadic_ks(std::int64_t k_min, std::int64_t k_max);

struct RateFit {
  double exponent = 0.0;   ///< least-squares slope of log delta against log k
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
  /// -(2 - beta)/6 with beta = 63/43.
  static constexpr double kTheoretical = -23.0 / 258.0;
};

/// Needs >= 10 converged records spanning >= 2 decades of k; records with
/// delta <= 1e-6 are skipped.
RateFit rate_fit(std::span<const OptimalRecord> records);

/// Median of delta over converged records with k in [k_lo, k_hi].
double median_delta(std::span<const OptimalRecord> records, std::int64_t k_lo, std::int64_t k_hi);

/// Medians of delta over the first and last decade of the k range.
struct DecadeTrend {
  double bottom_median = 0.0;
  double top_median = 0.0;
  std::int64_t k_min = 0;
  std::int64_t k_max = 0;
};
DecadeTrend decade_trend(std::span<const OptimalRecord> records);

}  // namespace boxspec
