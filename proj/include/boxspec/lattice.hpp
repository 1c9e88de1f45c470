#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "boxspec/cuboid.hpp"

namespace boxspec {

/// Every lattice count attached to the ellipsoid E(lambda) of a cuboid.
///
/// Arrays are indexed by 0-based axis: T_plane[0] is the section x1 = 0,
/// floors[0] = floor(a1 lambda^{1/2} / pi), and so on.
struct CountBundle {
  double lambda = 0.0;
  std::int64_t N = 0;  ///< positive octant, coordinate planes excluded
  std::int64_t T = 0;  ///< all of Z^3
  std::array<std::int64_t, 3> T_plane{};      ///< Z^2 points of the section x_i = 0
  std::array<std::int64_t, 3> T_plane_pos{};  ///< the same, both coordinates >= 1
  std::array<std::int64_t, 3> floors{};       ///< positive points on axis i

  /// T == 8N + 4 sum T+ + 2 sum floors + 1.
  bool full_identity_holds() const;
  /// T_plane[i] == 4 T+[i] + 2 (floors of the other two axes) + 1, all i.
  bool plane_identities_hold() const;
  /// 8N == T - sum T_plane + 2 sum floors + 2, i.e. the rational form of N.
  bool rational_identity_holds() const;
  bool consistent() const {
    return full_identity_holds() && plane_identities_hold() && rational_identity_holds();
  }
};

/// Lattice remainder exponents, kept for reporting only.
struct RemainderExponents {
  double beta = 63.0 / 43.0;    ///< sphere problem
  double theta = 131.0 / 208.0; ///< circle problem
};

/// T(lambda): points of Z^3 in the closed ellipsoid.
std::int64_t count_full(const Cuboid& box, double lambda);
/// T_{x_axis}(lambda); axis in {1, 2, 3}.
std::int64_t count_plane(const Cuboid& box, double lambda, int axis);
/// T^+_{x_axis}(lambda); axis in {1, 2, 3}.
std::int64_t count_plane_positive(const Cuboid& box, double lambda, int axis);
/// Positive lattice points on coordinate axis `axis` in {1, 2, 3}; equals
/// floor(a_axis lambda^{1/2} / pi) away from boundary ties.
std::int64_t count_axis(const Cuboid& box, double lambda, int axis);

CountBundle count_bundle(const Cuboid& box, double lambda);

/// #{x in Z^3 : |x|^2 <= n}, exact.
std::int64_t gauss_sphere_count_sq(std::uint64_t n);
/// #{x in Z^3 : |x| <= R}; R^2 is rounded with the inclusive count tolerance.
std::int64_t gauss_sphere_count(double radius);
std::int64_t gauss_circle_count_sq(std::uint64_t n);
std::int64_t gauss_circle_count(double radius);

/// Representations of n as x1^2 + x2^2 over Z^2 (signs and order counted), r2(0) = 1.
std::int64_t r2(std::uint64_t n);
/// Representations of d as a sum of three squares over Z^3.
std::int64_t r3(std::uint64_t d);
/// Number of positive divisors; n >= 1.
std::int64_t divisor_count(std::uint64_t n);
/// #{(i1,i2,i3) in N^3 : i1^2 + i2^2 + i3^2 = m}; m >= 1.
std::int64_t cube_multiplicity(std::uint64_t m);

/// Smallest-prime-factor sieve for batch arithmetic over [0, limit].
class ArithmeticTable {
 public:
  explicit ArithmeticTable(std::uint64_t limit);

  std::uint64_t limit() const { return spf_.size() - 1; }
  std::uint32_t smallest_prime_factor(std::uint64_t n) const;
  std::int64_t r2(std::uint64_t n) const;
  std::int64_t divisor_count(std::uint64_t n) const;

 private:
  std::vector<std::uint32_t> spf_;
};

}  // namespace boxspec
