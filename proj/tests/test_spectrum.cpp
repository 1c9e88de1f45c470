#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "boxspec/error.hpp"
#include "boxspec/spectrum.hpp"
#include "detail/ellipsoid_kernel.hpp"
#include "oracles.hpp"

using namespace boxspec;

namespace {

std::vector<Cuboid> pool() {
  return {Cuboid::unit_cube(),
          Cuboid::from_sides(0.5, 1.0),
          Cuboid::from_sides(0.8, 0.9),
          Cuboid::from_sides(0.3, 1.2),
          Cuboid::from_sides(0.0560023094349490, 1.0),
          Cuboid::from_sides(std::sqrt(2.0) / 2, std::cbrt(3.0) / 2)};
}

oracle::Box raw(const Cuboid& c) { return {c.a1(), c.a2(), c.a3()}; }

}  // namespace

TEST(EigenvalueOfIndex, Examples) {
  const Cuboid cube = Cuboid::unit_cube();
  EXPECT_DOUBLE_EQ(eigenvalue_of_index(cube, 1, 1, 1), 3 * kPi2);
  EXPECT_DOUBLE_EQ(eigenvalue_of_index(cube, 1, 1, 2), 6 * kPi2);
  EXPECT_DOUBLE_EQ(eigenvalue_of_index(Cuboid::from_sides(0.5, 1.0), 1, 1, 1), 5.25 * kPi2);
}

TEST(EigenvalueOfIndex, RejectsNonPositive) {
  const Cuboid cube = Cuboid::unit_cube();
  EXPECT_THROW(eigenvalue_of_index(cube, 0, 1, 1), InvalidInput);
  EXPECT_THROW(eigenvalue_of_index(cube, 1, -1, 1), InvalidInput);
}

TEST(EigenvalueOfIndex, StrictlyIncreasingInEachIndex) {
  const Cuboid c = Cuboid::from_sides(0.3, 1.2);
  EXPECT_LT(eigenvalue_of_index(c, 2, 3, 4), eigenvalue_of_index(c, 3, 3, 4));
  EXPECT_LT(eigenvalue_of_index(c, 2, 3, 4), eigenvalue_of_index(c, 2, 4, 4));
  EXPECT_LT(eigenvalue_of_index(c, 2, 3, 4), eigenvalue_of_index(c, 2, 3, 5));
}

TEST(CountUpto, Examples) {
  const Cuboid cube = Cuboid::unit_cube();
  EXPECT_EQ(count_upto(cube, 3 * kPi2), 1);
  EXPECT_EQ(count_upto(cube, 6 * kPi2), 4);
  for (const Cuboid& c : pool()) EXPECT_EQ(count_upto(c, 0.0), 0);
  EXPECT_THROW(count_upto(cube, -1.0), InvalidInput);
}

TEST(CountUpto, MatchesBruteForce) {
  for (const Cuboid& c : pool()) {
    for (double lambda : {10.0, 100.0, 537.0, 1500.0, 4000.0}) {
      EXPECT_EQ(count_upto(c, lambda), oracle::count_positive(raw(c), lambda)) << c.a1() << " " << lambda;
    }
  }
}

TEST(CountUpto, CubeUsesExactIntegerCount) {
  const Cuboid cube = Cuboid::unit_cube();
  for (std::int64_t m = 0; m <= 400; ++m) {
    std::int64_t expect = 0;
    for (std::int64_t i = 1; i * i <= m; ++i)
      for (std::int64_t j = 1; i * i + j * j <= m; ++j)
        for (std::int64_t l = 1; i * i + j * j + l * l <= m; ++l) ++expect;
    EXPECT_EQ(count_upto(cube, kPi2 * m), expect) << m;
  }
}

TEST(CountUpto, Nondecreasing) {
  const Cuboid c = Cuboid::from_sides(0.3, 1.2);
  std::int64_t last = 0;
  for (double lambda = 0.0; lambda < 3000.0; lambda += 7.77) {
    const std::int64_t n = count_upto(c, lambda);
    EXPECT_GE(n, last);
    last = n;
  }
}

TEST(KthEigenvalue, CubeExamples) {
  const Cuboid cube = Cuboid::unit_cube();
  const SpectralPoint p1 = kth_eigenvalue(cube, 1);
  EXPECT_DOUBLE_EQ(p1.value, 3 * kPi2);
  EXPECT_EQ(p1.multiplicity(), 1u);
  const SpectralPoint p2 = kth_eigenvalue(cube, 2);
  EXPECT_DOUBLE_EQ(p2.value, 6 * kPi2);
  const std::vector<IndexTriple> idx{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
  EXPECT_EQ(p2.indices, idx);
  EXPECT_DOUBLE_EQ(kth_eigenvalue(cube, 5).value, 9 * kPi2);
  EXPECT_THROW(kth_eigenvalue(cube, 0), InvalidInput);
}

TEST(KthEigenvalue, MatchesSortedBruteForce) {
  for (const Cuboid& c : pool()) {
    const std::vector<double> ref = oracle::lowest(raw(c), 300);
    for (std::size_t k = 1; k <= ref.size(); ++k) {
      EXPECT_NEAR(kth_eigenvalue_value(c, static_cast<std::int64_t>(k)), ref[k - 1], 1e-12 * ref[k - 1])
          << c.a1() << " k=" << k;
    }
  }
}

TEST(KthEigenvalue, IndicesReproduceValue) {
  for (const Cuboid& c : pool()) {
    for (std::int64_t k : {1, 7, 50, 333}) {
      const SpectralPoint p = kth_eigenvalue(c, k);
      ASSERT_GE(p.multiplicity(), 1u);
      for (const IndexTriple& t : p.indices) {
        EXPECT_NEAR(eigenvalue_of_index(c, t[0], t[1], t[2]), p.value, 1e-12 * p.value);
      }
    }
  }
}

TEST(KthEigenvalue, CountingDuality) {
  for (const Cuboid& c : pool()) {
    double previous = 0.0;
    for (std::int64_t k = 1; k <= 5000; k += (k < 100 ? 1 : 37)) {
      const double v = kth_eigenvalue_value(c, k);
      EXPECT_GE(count_upto(c, v), k);
      EXPECT_LT(count_upto(c, v * (1 - 1e-9)), k);
      EXPECT_GE(v, previous);
      previous = v;
    }
  }
}

TEST(KthEigenvalue, ResourceLimit) {
  SpectrumLimits tight;
  tight.max_slices = 10;
  EXPECT_THROW(kth_eigenvalue(Cuboid::from_sides(0.3, 1.2), 5000, tight), ResourceLimit);
}

TEST(LowestEigenvalues, DistinctAndCovering) {
  const Cuboid cube = Cuboid::unit_cube();
  const auto pts = lowest_eigenvalues(cube, 5);
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_DOUBLE_EQ(pts[0].value, 3 * kPi2);
  EXPECT_EQ(pts[1].multiplicity(), 3u);
  EXPECT_DOUBLE_EQ(pts[2].value, 9 * kPi2);
  for (const Cuboid& c : pool()) {
    const auto list = lowest_eigenvalues(c, 200);
    std::size_t total = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      total += list[i].multiplicity();
      if (i > 0) {
        EXPECT_GT(list[i].value, list[i - 1].value * (1 + kDegeneracyTolerance));
      }
    }
    EXPECT_GE(total, 200u);
  }
}

TEST(Weyl, CrudeEnvelope) {
  for (const Cuboid& c : pool()) {
    const double l1 = kth_eigenvalue_value(c, 1);
    for (double f : {100.0, 300.0, 1000.0}) {
      const double lambda = f * l1;
      const double ratio = count_upto(c, lambda) * 6 * kPi2 / std::pow(lambda, 1.5);
      EXPECT_GE(ratio, 0.5) << c.a1() << " " << f;
      EXPECT_LE(ratio, 1.5) << c.a1() << " " << f;
    }
  }
}

TEST(DomainMonotonicity, ShrinkingOneSideRaisesEigenvalues) {
  // Unconstrained boxes: only the kernel is used, the volume changes.
  const oracle::Box base{0.7, 1.1, 1.0 / 0.77};
  const auto weights = [](const oracle::Box& b) {
    return detail::Weights{1 / (b.a1 * b.a1), 1 / (b.a2 * b.a2), 1 / (b.a3 * b.a3)};
  };
  const auto base_vals = oracle::lowest(base, 60);
  for (int axis = 0; axis < 3; ++axis) {
    oracle::Box smaller = base;
    (axis == 0 ? smaller.a1 : axis == 1 ? smaller.a2 : smaller.a3) *= 0.93;
    for (double t = 0.5; t < 80.0; t += 0.37) {
      EXPECT_LE(detail::count_positive(weights(smaller), t), detail::count_positive(weights(base), t));
    }
    const auto vals = oracle::lowest(smaller, 60);
    for (std::size_t k = 0; k < vals.size(); ++k) EXPECT_GE(vals[k], base_vals[k]);
  }
}

TEST(CubeUpperBound, Examples) {
  EXPECT_DOUBLE_EQ(cube_upper_bound(1), 3 * kPi2);
  EXPECT_DOUBLE_EQ(cube_upper_bound(2), 12 * kPi2);
  EXPECT_DOUBLE_EQ(cube_upper_bound(10), 300 * kPi2);
  for (std::int64_t k = 1; k <= 200; ++k) EXPECT_LE(kth_eigenvalue_value(Cuboid::unit_cube(), k), cube_upper_bound(k));
}

TEST(Kernel, Isqrt) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    const std::uint64_t s = detail::isqrt(n);
    EXPECT_LE(s * s, n);
    EXPECT_GT((s + 1) * (s + 1), n);
  }
  EXPECT_EQ(detail::isqrt(0xFFFFFFFFull * 0xFFFFFFFFull), 0xFFFFFFFFull);
  EXPECT_EQ(detail::isqrt(~0ull), 0xFFFFFFFFull);
}
