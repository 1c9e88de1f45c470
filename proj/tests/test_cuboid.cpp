#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "boxspec/cuboid.hpp"
#include "boxspec/error.hpp"

using namespace boxspec;

TEST(Cuboid, SortsAndDerivesThirdSide) {
  const Cuboid c = Cuboid::from_sides(2.0, 0.5);
  EXPECT_DOUBLE_EQ(c.a1(), 0.5);
  EXPECT_DOUBLE_EQ(c.a2(), 1.0);
  EXPECT_DOUBLE_EQ(c.a3(), 2.0);
  EXPECT_NEAR(c.volume(), 1.0, 1e-15);
}

TEST(Cuboid, InverseSquares) {
  const Cuboid c = Cuboid::from_sides(0.5, 1.0);
  EXPECT_DOUBLE_EQ(c.inv_sq(0), 4.0);
  EXPECT_DOUBLE_EQ(c.inv_sq(1), 1.0);
  EXPECT_DOUBLE_EQ(c.inv_sq(2), 0.25);
}

TEST(Cuboid, UnitCube) {
  EXPECT_TRUE(Cuboid::unit_cube().is_unit_cube());
  EXPECT_TRUE(Cuboid::from_sides(1.0, 1.0).is_unit_cube());
  EXPECT_FALSE(Cuboid::from_sides(0.9, 1.0).is_unit_cube());
}

TEST(Cuboid, VolumeWithinTolerance) {
  for (double a1 : {0.056, 0.1, 0.37, 0.9}) {
    for (double a2 : {a1, 1.0, 1.0 / std::sqrt(a1)}) {
      const Cuboid c = Cuboid::from_sides(a1, a2);
      EXPECT_LE(std::abs(c.volume() - 1.0), 1e-12);
      EXPECT_LE(c.a1(), c.a2());
      EXPECT_LE(c.a2(), c.a3());
    }
  }
}

TEST(Cuboid, RejectsBadSides) {
  EXPECT_THROW(Cuboid::from_sides(0.0, 1.0), InvalidInput);
  EXPECT_THROW(Cuboid::from_sides(-1.0, 1.0), InvalidInput);
  EXPECT_THROW(Cuboid::from_sides(1.0, std::nan("")), InvalidInput);
  EXPECT_THROW(Cuboid::from_sides(std::numeric_limits<double>::infinity(), 1.0), InvalidInput);
  EXPECT_THROW(Cuboid::from_sides(1e-200, 1e-200), InvalidInput);
}

TEST(Cuboid, FromThreeSidesChecksProduct) {
  const Cuboid c = Cuboid::from_three_sides(2.0, 0.5, 1.0);
  EXPECT_EQ(c, Cuboid::from_sides(0.5, 1.0));
  EXPECT_THROW(Cuboid::from_three_sides(1.0, 1.0, 1.1), InvalidInput);
  EXPECT_THROW(Cuboid::from_three_sides(1.0, 0.0, 1.0), InvalidInput);
}

TEST(Ellipsoid, SemiAxesAndVolume) {
  const Cuboid c = Cuboid::from_sides(0.5, 1.0);
  const double lambda = 7.3;
  const EllipsoidSpec e(c, lambda);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(e.semi_axes[i], c.side(i) * std::sqrt(lambda) / kPi, 1e-15);
  const double product_volume = 4.0 / 3.0 * kPi * e.semi_axes[0] * e.semi_axes[1] * e.semi_axes[2];
  EXPECT_NEAR(e.volume() / product_volume, 1.0, 1e-12);
  EXPECT_THROW(EllipsoidSpec(c, -1.0), InvalidInput);
}
