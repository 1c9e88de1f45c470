#pragma once

#include <array>
#include <numbers>

namespace boxspec {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

/// Relative tolerance for deciding that a lattice point lies on the closed
/// ellipsoid: a triple counts if its eigenvalue is <= lambda * (1 + kCountTolerance).
inline constexpr double kCountTolerance = 1e-10;

/// Box of unit volume with sorted sides a1 <= a2 <= a3.
///
/// Construction takes two sides, sets the third to 1/(a1*a2) and sorts, so the
/// volume constraint holds up to one rounding. The inverse squared sides are
/// cached because every counting loop works with them.
class Cuboid {
 public:
  /// Throws InvalidInput for non-positive or non-finite sides.
  static Cuboid from_sides(double a1, double a2);
  static Cuboid unit_cube();
  /// Rebuilds a cuboid from stored sides without renormalising; the product
  /// must be within 1e-12 of 1. Used when reading records back.
  static Cuboid from_three_sides(double a1, double a2, double a3);

  double a1() const { return sides_[0]; }
  double a2() const { return sides_[1]; }
  double a3() const { return sides_[2]; }
  /// 0-based axis.
  double side(int axis) const { return sides_[axis]; }
  const std::array<double, 3>& sides() const { return sides_; }

  /// 1/a_i^2 for 0-based axis i.
  double inv_sq(int axis) const { return inv_sq_[axis]; }
  const std::array<double, 3>& inv_sq() const { return inv_sq_; }

  double volume() const { return sides_[0] * sides_[1] * sides_[2]; }
  bool is_unit_cube() const {
    return sides_[0] == 1.0 && sides_[1] == 1.0 && sides_[2] == 1.0;
  }

  friend bool operator==(const Cuboid&, const Cuboid&) = default;

 private:
  explicit Cuboid(std::array<double, 3> sorted_sides);

  std::array<double, 3> sides_;
  std::array<double, 3> inv_sq_;
};

/// Closed ellipsoid { x : sum x_i^2 / a_i^2 <= lambda / pi^2 } whose positive
/// lattice points are the eigenvalues <= lambda.
struct EllipsoidSpec {
  EllipsoidSpec(const Cuboid& box, double lambda);

  Cuboid cuboid;
  double lambda;
  std::array<double, 3> semi_axes;

  /// 4/(3 pi^2) * lambda^{3/2}.
  double volume() const;
};

}  // namespace boxspec
