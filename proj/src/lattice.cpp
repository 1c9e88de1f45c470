#include "boxspec/lattice.hpp"

#include <cmath>
#include <string>

#include "boxspec/error.hpp"
#include "boxspec/spectrum.hpp"
#include "detail/ellipsoid_kernel.hpp"

namespace boxspec {

namespace {

using detail::isqrt;
using detail::last_index;
using detail::sq;

void require_lambda(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InvalidInput("lambda must be finite and non-negative");
  }
}

int require_axis(int axis) {
  if (axis < 1 || axis > 3) throw InvalidInput("axis must be 1, 2 or 3");
  return axis - 1;
}

std::uint64_t cube_bound(double lambda) {
  const double t = detail::threshold(lambda);
  if (t >= 0x1p62) throw ResourceLimit("lambda too large for the integer cube path");
  return static_cast<std::uint64_t>(std::floor(t));
}

// Planar section through the origin: outer coordinate with weight w_outer,
// inner with w_inner. Predicate is sq(x)*w_outer + sq(y)*w_inner <= t, which
// coincides with the three-dimensional form when the third coordinate is 0.
std::int64_t plane_points(double w_outer, double w_inner, double t) {
  std::int64_t total = 0;
  for (std::int64_t x = 0;; ++x) {
    const double base = sq(x) * w_outer;
    if (!(base <= t)) break;
    total += (x == 0 ? 1 : 2) * (2 * last_index(base, w_inner, t) + 1);
  }
  return total;
}

std::int64_t plane_points_positive(double w_outer, double w_inner, double t) {
  std::int64_t total = 0;
  for (std::int64_t x = 1;; ++x) {
    const double base = sq(x) * w_outer;
    if (!(base + w_inner <= t)) break;
    total += last_index(base, w_inner, t);
  }
  return total;
}

// (outer, inner) weights for the section orthogonal to a 0-based axis; the
// outer loop runs along the shorter semi-axis.
std::pair<double, double> section_weights(const Cuboid& box, int axis0) {
  switch (axis0) {
    case 0:
      return {box.inv_sq(1), box.inv_sq(2)};
    case 1:
      return {box.inv_sq(0), box.inv_sq(2)};
    default:
      return {box.inv_sq(0), box.inv_sq(1)};
  }
}

std::int64_t circle_positive_sq(std::uint64_t n) {
  std::int64_t total = 0;
  for (std::uint64_t x = 1; x * x + 1 <= n; ++x) total += static_cast<std::int64_t>(isqrt(n - x * x));
  return total;
}

}  // namespace

bool CountBundle::full_identity_holds() const {
  std::int64_t rhs = 8 * N + 1;
  for (int i = 0; i < 3; ++i) rhs += 4 * T_plane_pos[i] + 2 * floors[i];
  return T == rhs;
}

bool CountBundle::plane_identities_hold() const {
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int l = (i + 2) % 3;
    if (T_plane[i] != 4 * T_plane_pos[i] + 2 * floors[j] + 2 * floors[l] + 1) return false;
  }
  return true;
}

bool CountBundle::rational_identity_holds() const {
  // N = T/8 - sum T_plane / 8 + sum floors / 4 + 1/4, scaled by 8.
  std::int64_t numerator = T + 2;
  for (int i = 0; i < 3; ++i) numerator += -T_plane[i] + 2 * floors[i];
  return numerator == 8 * N;
}

std::int64_t count_full(const Cuboid& box, double lambda) {
  require_lambda(lambda);
  if (box.is_unit_cube()) return gauss_sphere_count_sq(cube_bound(lambda));
  const detail::Weights w = detail::weights_of(box);
  const double t = detail::threshold(lambda);
  std::int64_t total = 0;
  for (std::int64_t x1 = 0;; ++x1) {
    const double head = sq(x1) * w.w1;
    if (!(head <= t)) break;
    const std::int64_t w_x1 = x1 == 0 ? 1 : 2;
    for (std::int64_t x2 = 0;; ++x2) {
      const double base = head + sq(x2) * w.w2;
      if (!(base <= t)) break;
      const std::int64_t w_x2 = x2 == 0 ? 1 : 2;
      total += w_x1 * w_x2 * (2 * last_index(base, w.w3, t) + 1);
    }
  }
  return total;
}

std::int64_t count_plane(const Cuboid& box, double lambda, int axis) {
  require_lambda(lambda);
  const int axis0 = require_axis(axis);
  if (box.is_unit_cube()) return gauss_circle_count_sq(cube_bound(lambda));
  const auto [outer, inner] = section_weights(box, axis0);
  return plane_points(outer, inner, detail::threshold(lambda));
}

std::int64_t count_plane_positive(const Cuboid& box, double lambda, int axis) {
  require_lambda(lambda);
  const int axis0 = require_axis(axis);
  if (box.is_unit_cube()) return circle_positive_sq(cube_bound(lambda));
  const auto [outer, inner] = section_weights(box, axis0);
  return plane_points_positive(outer, inner, detail::threshold(lambda));
}

std::int64_t count_axis(const Cuboid& box, double lambda, int axis) {
  require_lambda(lambda);
  const int axis0 = require_axis(axis);
  if (box.is_unit_cube()) return static_cast<std::int64_t>(isqrt(cube_bound(lambda)));
  return last_index(0.0, box.inv_sq(axis0), detail::threshold(lambda));
}

CountBundle count_bundle(const Cuboid& box, double lambda) {
  require_lambda(lambda);
  CountBundle b;
  b.lambda = lambda;
  // N comes from the spectral counter so the identities tie both modules together.
  b.N = count_upto(box, lambda);
  b.T = count_full(box, lambda);
  for (int axis = 1; axis <= 3; ++axis) {
    b.T_plane[axis - 1] = count_plane(box, lambda, axis);
    b.T_plane_pos[axis - 1] = count_plane_positive(box, lambda, axis);
    b.floors[axis - 1] = count_axis(box, lambda, axis);
  }
  return b;
}

std::int64_t gauss_sphere_count_sq(std::uint64_t n) {
  std::int64_t total = 0;
  for (std::uint64_t x1 = 0; x1 * x1 <= n; ++x1) {
    const std::int64_t w1 = x1 == 0 ? 1 : 2;
    for (std::uint64_t x2 = 0; x1 * x1 + x2 * x2 <= n; ++x2) {
      const std::int64_t w2 = x2 == 0 ? 1 : 2;
      total += w1 * w2 * (2 * static_cast<std::int64_t>(isqrt(n - x1 * x1 - x2 * x2)) + 1);
    }
  }
  return total;
}

std::int64_t gauss_circle_count_sq(std::uint64_t n) {
  std::int64_t total = 0;
  for (std::uint64_t x = 0; x * x <= n; ++x) {
    total += (x == 0 ? 1 : 2) * (2 * static_cast<std::int64_t>(isqrt(n - x * x)) + 1);
  }
  return total;
}

namespace {

std::uint64_t radius_to_bound(double radius) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw InvalidInput("radius must be finite and non-negative");
  }
  const double r2 = radius * radius * (1.0 + kCountTolerance);
  if (r2 >= 0x1p62) throw ResourceLimit("radius too large");
  return static_cast<std::uint64_t>(std::floor(r2));
}

}  // namespace

std::int64_t gauss_sphere_count(double radius) { return gauss_sphere_count_sq(radius_to_bound(radius)); }

std::int64_t gauss_circle_count(double radius) { return gauss_circle_count_sq(radius_to_bound(radius)); }

std::int64_t r2(std::uint64_t n) {
  if (n == 0) return 1;
  while (n % 2 == 0) n /= 2;
  // sum over odd d | n of chi_4(d), evaluated prime by prime:
  // p = 1 mod 4 contributes (e+1), p = 3 mod 4 contributes [e even].
  std::int64_t sum = 1;
  for (std::uint64_t p = 3; p * p <= n; p += 2) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (p % 4 == 1) {
      sum *= e + 1;
    } else if (e % 2 == 1) {
      return 0;
    }
  }
  if (n > 1) {
    if (n % 4 == 3) return 0;
    sum *= 2;
  }
  return 4 * sum;
}

std::int64_t r3(std::uint64_t d) {
  std::int64_t total = r2(d);
  for (std::uint64_t z = 1; z * z <= d; ++z) total += 2 * r2(d - z * z);
  return total;
}

std::int64_t divisor_count(std::uint64_t n) {
  if (n == 0) throw InvalidInput("divisor_count requires n >= 1");
  std::int64_t count = 0;
  std::uint64_t d = 1;
  for (; d * d < n; ++d) {
    if (n % d == 0) count += 2;
  }
  if (d * d == n) ++count;
  return count;
}

std::int64_t cube_multiplicity(std::uint64_t m) {
  if (m == 0) throw InvalidInput("cube_multiplicity requires m >= 1");
  std::int64_t count = 0;
  for (std::uint64_t i1 = 1; i1 * i1 + 2 <= m; ++i1) {
    for (std::uint64_t i2 = 1; i1 * i1 + i2 * i2 + 1 <= m; ++i2) {
      const std::uint64_t rest = m - i1 * i1 - i2 * i2;
      const std::uint64_t s = isqrt(rest);
      if (s * s == rest) ++count;
    }
  }
  return count;
}

ArithmeticTable::ArithmeticTable(std::uint64_t limit) : spf_(limit + 1, 0) {
  if (limit > 0xFFFFFFFFull) throw ResourceLimit("arithmetic table limit exceeds 2^32");
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

std::uint32_t ArithmeticTable::smallest_prime_factor(std::uint64_t n) const {
  if (n < 2 || n > limit()) throw InvalidInput("n outside the sieve range");
  return spf_[n];
}

std::int64_t ArithmeticTable::r2(std::uint64_t n) const {
  if (n > limit()) throw InvalidInput("n outside the sieve range");
  if (n == 0) return 1;
  std::int64_t sum = 1;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (p == 2) continue;
    if (p % 4 == 1) {
      sum *= e + 1;
    } else if (e % 2 == 1) {
      return 0;
    }
  }
  return 4 * sum;
}

std::int64_t ArithmeticTable::divisor_count(std::uint64_t n) const {
  if (n == 0 || n > limit()) throw InvalidInput("n outside the sieve range");
  std::int64_t count = 1;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  return count;
}

}  // namespace boxspec
