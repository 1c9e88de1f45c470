#pragma once

// Shared lattice kernel for the closed ellipsoid
//   q(x) = (x1^2 w1 + x2^2 w2) + x3^2 w3 <= t.
//
// Every count in the library goes through `form` / `last_index` with this exact
// association order, so N, T, the planar sections and the axis terms classify
// each boundary point identically and the symmetry decomposition holds as an
// integer identity.

#include <cmath>
#include <cstdint>

#include "boxspec/cuboid.hpp"
#include "boxspec/error.hpp"

namespace boxspec::detail {

struct Weights {
  double w1, w2, w3;
};

inline Weights weights_of(const Cuboid& box) {
  return {box.inv_sq(0), box.inv_sq(1), box.inv_sq(2)};
}

inline double sq(std::int64_t x) {
  const double d = static_cast<double>(x);
  return d * d;
}

inline double form(const Weights& w, std::int64_t x1, std::int64_t x2, std::int64_t x3) {
  return (sq(x1) * w.w1 + sq(x2) * w.w2) + sq(x3) * w.w3;
}

/// Threshold in q-units for "eigenvalue <= lambda", inclusive with tolerance.
inline double threshold(double lambda) { return lambda * (1.0 + kCountTolerance) / kPi2; }

// Past this the sqrt guess no longer fits in an int64 comfortably.
inline constexpr double kMaxIndexSquared = 1e36;

/// Largest m >= 0 with base + m^2 w <= t, or -1 when base > t.
inline std::int64_t last_index(double base, double w, double t) {
  if (!(base <= t)) return -1;
  const double r = (t - base) / w;
  if (r > kMaxIndexSquared) throw ResourceLimit("lattice index range exceeds 1e18");
  auto m = static_cast<std::int64_t>(std::sqrt(r));
  while (base + sq(m + 1) * w <= t) ++m;
  while (m > 0 && base + sq(m) * w > t) --m;
  return m;
}

/// #{(i1,i2,i3) in N^3 : q <= t}.
inline std::int64_t count_positive(const Weights& w, double t) {
  std::int64_t total = 0;
  for (std::int64_t i1 = 1; form(w, i1, 1, 1) <= t; ++i1) {
    for (std::int64_t i2 = 1;; ++i2) {
      const double base = sq(i1) * w.w1 + sq(i2) * w.w2;
      if (!(base + w.w3 <= t)) break;
      total += last_index(base, w.w3, t);
    }
  }
  return total;
}

/// Calls emit(i1, i2, i3, q) for every positive triple with lo < q <= hi.
template <class Emit>
void for_each_in_shell(const Weights& w, double lo, double hi, Emit&& emit) {
  for (std::int64_t i1 = 1; form(w, i1, 1, 1) <= hi; ++i1) {
    for (std::int64_t i2 = 1;; ++i2) {
      const double base = sq(i1) * w.w1 + sq(i2) * w.w2;
      if (!(base + w.w3 <= hi)) break;
      const std::int64_t top = last_index(base, w.w3, hi);
      const std::int64_t bottom = base + w.w3 <= lo ? last_index(base, w.w3, lo) : 0;
      for (std::int64_t i3 = bottom + 1; i3 <= top; ++i3) {
        emit(i1, i2, i3, base + sq(i3) * w.w3);
      }
    }
  }
}

/// Integer square root: largest s with s*s <= n.
inline std::uint64_t isqrt(std::uint64_t n) {
  constexpr std::uint64_t kMaxRoot = 0xFFFFFFFFull;
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  if (s > kMaxRoot) s = kMaxRoot;
  while (s > 0 && s * s > n) --s;
  while (s < kMaxRoot && (s + 1) * (s + 1) <= n) ++s;
  return s;
}

}  // namespace boxspec::detail
