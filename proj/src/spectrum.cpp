#include "boxspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "boxspec/error.hpp"
#include "detail/ellipsoid_kernel.hpp"

namespace boxspec {

namespace {

using detail::Weights;

// Bisection stops once the bracket holds at most this many candidates.
constexpr std::int64_t kShellWindow = 64;

std::int64_t count_unit_cube(double lambda) {
  const double t = detail::threshold(lambda);
  if (t >= 0x1p62) throw ResourceLimit("lambda too large for the integer cube path");
  const auto m = static_cast<std::uint64_t>(std::floor(t));
  std::int64_t total = 0;
  for (std::uint64_t i1 = 1; i1 * i1 + 2 <= m; ++i1) {
    for (std::uint64_t i2 = 1; i1 * i1 + i2 * i2 + 1 <= m; ++i2) {
      total += static_cast<std::int64_t>(detail::isqrt(m - i1 * i1 - i2 * i2));
    }
  }
  return total;
}

void check_slices(const Weights& w, double t, const SpectrumLimits& limits) {
  const double slices = 0.25 * kPi * std::sqrt(t / w.w1) * std::sqrt(t / w.w2);
  if (!(slices <= limits.max_slices)) {
    throw ResourceLimit("eigenvalue search needs ~" + std::to_string(slices) +
                        " lattice slices (cap " + std::to_string(limits.max_slices) + ")");
  }
}

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  std::int64_t count_lo = 0;
  std::int64_t count_hi = 0;
};

double initial_ceiling(std::int64_t k) {
  const double kk = static_cast<double>(k);
  const double weyl = 4.0 * std::pow(6.0 * kPi2 * kk, 2.0 / 3.0) / kPi2;
  return std::min(3.0 * kk * kk, weyl);
}

// Narrow (lo, hi] in q-units until count(lo) < k <= count(hi) and the shell is small.
Bracket bracket_kth(const Weights& w, std::int64_t k, const SpectrumLimits& limits) {
  Bracket b;
  b.hi = initial_ceiling(k);
  check_slices(w, b.hi, limits);
  b.count_hi = detail::count_positive(w, b.hi);
  while (b.count_hi < k) {
    b.lo = b.hi;
    b.count_lo = b.count_hi;
    b.hi *= 2.0;
    if (!std::isfinite(b.hi)) throw ResourceLimit("eigenvalue ceiling overflowed");
    check_slices(w, b.hi, limits);
    b.count_hi = detail::count_positive(w, b.hi);
  }
  while (b.count_hi - b.count_lo > kShellWindow) {
    const double mid = 0.5 * (b.lo + b.hi);
    if (!(mid > b.lo && mid < b.hi)) break;
    const std::int64_t c = detail::count_positive(w, mid);
    if (c >= k) {
      b.hi = mid;
      b.count_hi = c;
    } else {
      b.lo = mid;
      b.count_lo = c;
    }
  }
  if (b.count_hi - b.count_lo > limits.max_candidates) {
    throw ResourceLimit("eigenvalue shell holds " + std::to_string(b.count_hi - b.count_lo) +
                        " unresolvable candidates");
  }
  return b;
}

double kth_form_value(const Weights& w, std::int64_t k, const SpectrumLimits& limits) {
  const Bracket b = bracket_kth(w, k, limits);
  std::vector<double> shell;
  shell.reserve(static_cast<std::size_t>(b.count_hi - b.count_lo));
  detail::for_each_in_shell(w, b.lo, b.hi, [&](std::int64_t, std::int64_t, std::int64_t, double q) {
    shell.push_back(q);
  });
  const auto pos = static_cast<std::ptrdiff_t>(k - b.count_lo - 1);
  std::nth_element(shell.begin(), shell.begin() + pos, shell.end());
  return shell[static_cast<std::size_t>(pos)];
}

void require_k(std::int64_t k) {
  if (k < 1) throw InvalidInput("eigenvalue index k must be >= 1 (got " + std::to_string(k) + ")");
}

}  // namespace

double eigenvalue_of_index(const Cuboid& box, std::int64_t i1, std::int64_t i2, std::int64_t i3) {
  if (i1 < 1 || i2 < 1 || i3 < 1) throw InvalidInput("mode indices must be positive integers");
  return kPi2 * detail::form(detail::weights_of(box), i1, i2, i3);
}

std::int64_t count_upto(const Cuboid& box, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InvalidInput("lambda must be finite and non-negative");
  }
  if (box.is_unit_cube()) return count_unit_cube(lambda);
  return detail::count_positive(detail::weights_of(box), detail::threshold(lambda));
}

double kth_eigenvalue_value(const Cuboid& box, std::int64_t k, const SpectrumLimits& limits) {
  require_k(k);
  return kPi2 * kth_form_value(detail::weights_of(box), k, limits);
}

SpectralPoint kth_eigenvalue(const Cuboid& box, std::int64_t k, const SpectrumLimits& limits) {
  require_k(k);
  const Weights w = detail::weights_of(box);
  const double q = kth_form_value(w, k, limits);
  SpectralPoint point;
  point.value = kPi2 * q;
  detail::for_each_in_shell(w, q * (1.0 - kDegeneracyTolerance), q * (1.0 + kDegeneracyTolerance),
                            [&](std::int64_t i1, std::int64_t i2, std::int64_t i3, double) {
                              point.indices.push_back({i1, i2, i3});
                            });
  std::sort(point.indices.begin(), point.indices.end());
  return point;
}

std::vector<SpectralPoint> lowest_eigenvalues(const Cuboid& box, std::int64_t k,
                                              const SpectrumLimits& limits) {
  require_k(k);
  const Weights w = detail::weights_of(box);
  const double q_top = kth_form_value(w, k, limits) * (1.0 + kDegeneracyTolerance);

  struct Mode {
    double q;
    IndexTriple index;
  };
  std::vector<Mode> modes;
  detail::for_each_in_shell(w, 0.0, q_top,
                            [&](std::int64_t i1, std::int64_t i2, std::int64_t i3, double q) {
                              modes.push_back({q, {i1, i2, i3}});
                            });
  std::sort(modes.begin(), modes.end(), [](const Mode& x, const Mode& y) {
    return x.q != y.q ? x.q < y.q : x.index < y.index;
  });

  std::vector<SpectralPoint> out;
  double previous = 0.0;
  for (const Mode& m : modes) {
    if (out.empty() || m.q - previous > kDegeneracyTolerance * previous) {
      out.push_back({kPi2 * m.q, {}});
    }
    out.back().indices.push_back(m.index);
    previous = m.q;
  }
  for (SpectralPoint& p : out) std::sort(p.indices.begin(), p.indices.end());
  return out;
}

double cube_upper_bound(std::int64_t k) {
  require_k(k);
  const double kk = static_cast<double>(k);
  return 3.0 * kPi2 * kk * kk;
}

}  // namespace boxspec
