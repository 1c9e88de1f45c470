#include "boxspec/cuboid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "boxspec/error.hpp"

namespace boxspec {

Cuboid::Cuboid(std::array<double, 3> sorted_sides) : sides_(sorted_sides) {
  for (int i = 0; i < 3; ++i) inv_sq_[i] = 1.0 / (sides_[i] * sides_[i]);
}

Cuboid Cuboid::from_sides(double a1, double a2) {
  if (!(std::isfinite(a1) && std::isfinite(a2)) || a1 <= 0.0 || a2 <= 0.0) {
    throw InvalidInput("cuboid sides must be positive and finite (got a1=" +
                       std::to_string(a1) + ", a2=" + std::to_string(a2) + ")");
  }
  const double a3 = 1.0 / (a1 * a2);
  if (!std::isfinite(a3) || a3 <= 0.0) {
    throw InvalidInput("cuboid sides produce a degenerate third side");
  }
  std::array<double, 3> s{a1, a2, a3};
  std::sort(s.begin(), s.end());
  return Cuboid(s);
}

Cuboid Cuboid::from_three_sides(double a1, double a2, double a3) {
  for (double a : {a1, a2, a3}) {
    if (!std::isfinite(a) || a <= 0.0) throw InvalidInput("cuboid sides must be positive and finite");
  }
  std::array<double, 3> s{a1, a2, a3};
  std::sort(s.begin(), s.end());
  if (std::abs(s[0] * s[1] * s[2] - 1.0) > 1e-12) throw InvalidInput("cuboid sides must have unit product");
  return Cuboid(s);
}

Cuboid Cuboid::unit_cube() { return Cuboid({1.0, 1.0, 1.0}); }

EllipsoidSpec::EllipsoidSpec(const Cuboid& box, double lam)
    : cuboid(box), lambda(lam) {
  if (!(lam >= 0.0) || !std::isfinite(lam)) {
    throw InvalidInput("lambda must be finite and non-negative");
  }
  const double root = std::sqrt(lam) / kPi;
  for (int i = 0; i < 3; ++i) semi_axes[i] = box.side(i) * root;
}

double EllipsoidSpec::volume() const {
  return 4.0 / (3.0 * kPi2) * std::pow(lambda, 1.5);
}

}  // namespace boxspec
