#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "boxspec/error.hpp"
#include "boxspec/lattice.hpp"
#include "boxspec/spectrum.hpp"
#include "oracles.hpp"

using namespace boxspec;

namespace {

oracle::Box raw(const Cuboid& c) { return {c.a1(), c.a2(), c.a3()}; }

}  // namespace

TEST(CountFull, Examples) {
  const Cuboid cube = Cuboid::unit_cube();
  EXPECT_EQ(count_full(cube, kPi2), 7);
  EXPECT_EQ(count_full(cube, 3 * kPi2), 27);
  EXPECT_EQ(count_full(Cuboid::from_sides(0.3, 1.2), 0.0), 1);
}

TEST(CountFull, MatchesBruteForce) {
  for (const Cuboid& c : {Cuboid::unit_cube(), Cuboid::from_sides(0.5, 1.0), Cuboid::from_sides(0.27, 0.9)}) {
    for (double lambda : {0.5, 12.0, 150.0, 900.0}) {
      const std::int64_t t = count_full(c, lambda);
      EXPECT_EQ(t, oracle::count_all(raw(c), lambda));
      EXPECT_EQ(t % 2, 1);
    }
  }
}

TEST(CountPlane, Examples) {
  const Cuboid cube = Cuboid::unit_cube();
  EXPECT_EQ(count_plane(cube, kPi2, 1), 5);
  EXPECT_EQ(count_plane(cube, 2 * kPi2, 3), 9);
  for (int axis = 1; axis <= 3; ++axis) EXPECT_EQ(count_plane(Cuboid::from_sides(0.5, 1.0), 0.0, axis), 1);
  EXPECT_THROW(count_plane(cube, 1.0, 0), InvalidInput);
  EXPECT_THROW(count_plane(cube, 1.0, 4), InvalidInput);
}

TEST(CountPlane, MatchesBruteForce) {
  const Cuboid c = Cuboid::from_sides(0.27, 0.9);
  const double s[3] = {c.a1(), c.a2(), c.a3()};
  for (double lambda : {3.0, 80.0, 700.0}) {
    const double lim = lambda * (1 + 1e-10) / kPi2;
    for (int axis = 1; axis <= 3; ++axis) {
      const double p = s[axis % 3], q = s[(axis + 1) % 3];
      std::int64_t expect = 0, expect_pos = 0;
      for (std::int64_t i = -200; i <= 200; ++i)
        for (std::int64_t j = -200; j <= 200; ++j) {
          const double v = (i / p) * (i / p) + (j / q) * (j / q);
          if (v <= lim) {
            ++expect;
            expect_pos += i > 0 && j > 0;
          }
        }
      EXPECT_EQ(count_plane(c, lambda, axis), expect) << axis;
      EXPECT_EQ(count_plane_positive(c, lambda, axis), expect_pos) << axis;
    }
  }
}

TEST(CountAxis, MatchesFloor) {
  const Cuboid c = Cuboid::from_sides(0.37, 0.91);
  for (double lambda : {1.0, 55.5, 1234.5}) {
    for (int axis = 1; axis <= 3; ++axis) {
      EXPECT_EQ(count_axis(c, lambda, axis),
                static_cast<std::int64_t>(std::floor(c.side(axis - 1) * std::sqrt(lambda) / kPi)));
    }
  }
}

TEST(CountBundle, CubeExample) {
  const CountBundle b = count_bundle(Cuboid::unit_cube(), 3 * kPi2);
  EXPECT_EQ(b.N, 1);
  EXPECT_EQ(b.T, 27);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(b.T_plane[i], 9);
    EXPECT_EQ(b.T_plane_pos[i], 1);
    EXPECT_EQ(b.floors[i], 1);
  }
  EXPECT_EQ(b.T, 8 + 12 + 6 + 1);
  EXPECT_TRUE(b.consistent());
}

TEST(CountBundle, ZeroLambda) {
  const CountBundle b = count_bundle(Cuboid::from_sides(0.3, 1.2), 0.0);
  EXPECT_EQ(b.N, 0);
  EXPECT_EQ(b.T, 1);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(b.T_plane[i], 1);
    EXPECT_EQ(b.T_plane_pos[i], 0);
    EXPECT_EQ(b.floors[i], 0);
  }
  EXPECT_TRUE(b.consistent());
}

TEST(CountBundle, SkewBoxAtFirstEigenvalue) {
  const Cuboid c = Cuboid::from_sides(0.5, 1.0);
  const CountBundle b = count_bundle(c, 5.25 * kPi2);
  EXPECT_EQ(b.N, 1);
  EXPECT_TRUE(b.consistent());
  EXPECT_EQ(b.T, oracle::count_all(raw(c), 5.25 * kPi2));
}

TEST(CountBundle, IdentityOnRandomPairsIncludingEigenvalues) {
  std::mt19937_64 rng(7);
  const auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1p-53; };
  for (int i = 0; i < 300; ++i) {
    const double a1 = 0.06 + 0.94 * unit();
    const double a2 = a1 + unit() * (1 / std::sqrt(a1) - a1);
    const Cuboid c = Cuboid::from_sides(a1, a2);
    double lambda = 1e4 * unit();
    if (i % 3 == 0) lambda = kth_eigenvalue_value(c, 1 + static_cast<std::int64_t>(rng() % 200));
    const CountBundle b = count_bundle(c, lambda);
    EXPECT_TRUE(b.consistent()) << a1 << " " << a2 << " " << lambda;
    EXPECT_EQ(b.N, count_upto(c, lambda));
  }
}

TEST(CountBundle, RejectsNegativeLambda) { EXPECT_THROW(count_bundle(Cuboid::unit_cube(), -1.0), InvalidInput); }

TEST(Gauss, SphereExamples) {
  EXPECT_EQ(gauss_sphere_count(0.0), 1);
  EXPECT_EQ(gauss_sphere_count(1.0), 7);
  EXPECT_EQ(gauss_sphere_count(10.0), oracle::sphere_points(100));
  EXPECT_EQ(gauss_sphere_count(10.0), 4169);
  for (std::uint64_t n = 0; n < 300; ++n) EXPECT_EQ(gauss_sphere_count_sq(n), oracle::sphere_points(n));
}

TEST(Gauss, CircleExamples) {
  EXPECT_EQ(gauss_circle_count(0.0), 1);
  EXPECT_EQ(gauss_circle_count(1.0), 5);
  EXPECT_EQ(gauss_circle_count(2.0), 13);
  for (std::uint64_t n = 0; n < 2000; ++n) EXPECT_EQ(gauss_circle_count_sq(n), oracle::circle_points(n));
  EXPECT_THROW(gauss_circle_count(-1.0), InvalidInput);
}

TEST(Arithmetic, R2Examples) {
  EXPECT_EQ(r2(0), 1);
  EXPECT_EQ(r2(1), 4);
  EXPECT_EQ(r2(3), 0);
  EXPECT_EQ(r2(25), 12);
}

TEST(Arithmetic, R2MatchesEnumeration) {
  for (std::int64_t n = 0; n <= 5000; ++n) ASSERT_EQ(r2(n), oracle::r2(n)) << n;
}

TEST(Arithmetic, R3Examples) {
  EXPECT_EQ(r3(0), 1);
  EXPECT_EQ(r3(1), 6);
  EXPECT_EQ(r3(6), 24);
  for (std::int64_t d = 0; d <= 60; ++d) EXPECT_EQ(r3(d), oracle::r3(d)) << d;
}

TEST(Arithmetic, DivisorCount) {
  EXPECT_EQ(divisor_count(1), 1);
  EXPECT_EQ(divisor_count(12), 6);
  EXPECT_EQ(divisor_count(97), 2);
  for (std::int64_t n = 1; n <= 2000; ++n) EXPECT_EQ(divisor_count(n), oracle::divisors(n));
  EXPECT_THROW(divisor_count(0), InvalidInput);
}

TEST(Arithmetic, CubeMultiplicity) {
  EXPECT_EQ(cube_multiplicity(3), 1);
  EXPECT_EQ(cube_multiplicity(6), 3);
  EXPECT_EQ(cube_multiplicity(9), 3);
  for (std::int64_t m = 1; m <= 500; ++m) EXPECT_EQ(cube_multiplicity(m), oracle::octant_sphere(m));
  EXPECT_THROW(cube_multiplicity(0), InvalidInput);
}

TEST(Arithmetic, OctantBookkeepingReproducesR3) {
  // Split Z^3 points of norm d by the number of zero coordinates.
  for (std::uint64_t d = 1; d <= 400; ++d) {
    std::int64_t planar = 0;  // exactly one zero coordinate, positive in the other two
    for (std::int64_t x = 1; x * x < static_cast<std::int64_t>(d); ++x) {
      const std::int64_t rest = static_cast<std::int64_t>(d) - x * x;
      const auto y = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
      planar += y * y == rest;
    }
    const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d))));
    const std::int64_t axis = root * root == static_cast<std::int64_t>(d) ? 1 : 0;
    EXPECT_EQ(8 * cube_multiplicity(d) + 4 * 3 * planar + 2 * 3 * axis, r3(d)) << d;
  }
}

TEST(Arithmetic, ProjectionBound) {
  for (std::uint64_t m = 1; m <= 3000; ++m) {
    std::int64_t quadrant = 0;
    for (std::int64_t x = 1; static_cast<std::uint64_t>(x * x) < m; ++x)
      for (std::int64_t y = 1; static_cast<std::uint64_t>(x * x + y * y) <= m; ++y) ++quadrant;
    EXPECT_LE(cube_multiplicity(m), quadrant) << m;
    EXPECT_LE(static_cast<double>(quadrant), kPi * static_cast<double>(m) / 4.0) << m;
  }
}

TEST(ArithmeticTable, AgreesWithDirect) {
  const ArithmeticTable table(20000);
  EXPECT_EQ(table.limit(), 20000u);
  EXPECT_EQ(table.smallest_prime_factor(97), 97u);
  EXPECT_EQ(table.smallest_prime_factor(91), 7u);
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    ASSERT_EQ(table.r2(n), r2(n)) << n;
    ASSERT_EQ(table.divisor_count(n), divisor_count(n)) << n;
  }
  EXPECT_EQ(table.r2(0), 1);
  EXPECT_THROW(table.r2(20001), InvalidInput);
}
