#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "boxspec/cuboid.hpp"
#include "boxspec/lattice.hpp"

namespace boxspec {

/// Relative slack below which a report counts as violated:
/// pass <=> slack >= -kReportTolerance * max(1, |rhs|).
inline constexpr double kReportTolerance = 1e-9;

/// Parameters of the lattice-sum lemmas: sum_{i=1}^{floor(sqrt(y)/a)} (y - a^2 i^2)^{n/2}.
struct BoundQuery {
  double y = 0.0;
  double a = 1.0;
  int n = 1;
};

/// One evaluated inequality lhs <= rhs (or an equality, see make_equality_report).
struct BoundReport {
  std::string name;
  std::string inputs;  ///< "key=value;key=value", no commas
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
};

BoundReport make_inequality_report(std::string name, std::string inputs, double lhs, double rhs);
/// Equality check; slack = -|rhs - lhs| so the same pass rule applies.
BoundReport make_equality_report(std::string name, std::string inputs, double lhs, double rhs);

/// Gamma(twice_x / 2) for twice_x >= 1 via the integer / half-integer closed forms.
double gamma_half(int twice_x);

double lemma_sum(const BoundQuery& q);
/// Three-term concavity bound, n in {1, 2} only.
double lemma31_rhs(const BoundQuery& q);
/// Integral bound, any n >= 1.
double lemma32_rhs(const BoundQuery& q);

/// lambda^{3/2}/(6 pi^2) - lambda/(8 pi a1) + lambda^{1/2}/(16 a1^2), an upper bound for N(lambda).
double lemma41_rhs(const Cuboid& box, double lambda);

/// nu_k^{3/2} <= 6 pi^2 k + 3 pi nu_k (1/2 + sqrt 3) for the unit-cube eigenvalue nu_k.
BoundReport cube_eigenvalue_bound(std::int64_t k, double nu_k);

/// Uniform floor 1/(8 (1/2 + sqrt 3)) for the shortest side of an optimal cuboid.
double a1_lower_bound();
/// 64 (1/2 + sqrt 3)^2, the implied ceiling on a3* (<= 319).
double a3_upper_bound();

/// (6 pi^2 k)^{2/3}.
double polya_lower_bound(std::int64_t k);

/// (1+d)^{3/2} >= 1 + 3d/2 + 3d^2/160 on 0 <= d <= 399.
BoundReport delta_minorant(double delta);
/// 2 sqrt(a3) + 1/a3 <= 3 + budget, combined with the minorant at d = a3 - 1.
/// a3 > 400 is reported as failing (outside the minorant's range).
BoundReport delta_from_am_gm(double a3_star, double budget);

/// N(nu) >= (omega_3/8) (nu^{1/2}/pi - sqrt 3)_+^3 for the unit cube.
BoundReport gauss_octant_bound(std::int64_t count_at_nu, double nu);
/// k <= N(nu_k) and N(nu_k) <= k + Theta_k - 1.
std::array<BoundReport, 2> multiplicity_chain(std::int64_t k, std::int64_t count_at_nu,
                                              std::int64_t multiplicity);

/// Empirical sizes of the remainder constants: the largest observed
/// |T - 4 lambda^{3/2}/(3 pi^2)| / lambda^{beta/2} and
/// |T_x - a_j a_l lambda / pi| / lambda^{theta/2}. Descriptive only.
struct RemainderEstimate {
  double C = 0.0;
  double D = 0.0;
  std::int64_t samples = 0;
};
RemainderEstimate estimate_remainder_constants(std::span<const Cuboid> boxes,
                                               std::span<const double> lambdas,
                                               const RemainderExponents& exponents = {});

}  // namespace boxspec
