#include "boxspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "boxspec/error.hpp"
#include "boxspec/numfmt.hpp"

namespace boxspec {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kSqrtPi = 1.7724538509055160;

// x^{n/2} for x >= 0 using only multiplications and one sqrt.
double pow_half(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n / 2; ++i) r *= x;
  if (n % 2 == 1) r *= std::sqrt(x);
  return r;
}

void validate(const BoundQuery& q) {
  if (!(q.y >= 0.0) || !std::isfinite(q.y)) throw InvalidInput("lemma query needs y >= 0");
  if (!(q.a > 0.0) || !std::isfinite(q.a)) throw InvalidInput("lemma query needs a > 0");
  if (q.n < 1) throw InvalidInput("lemma query needs n >= 1");
}

// sqrt(pi)/2 * Gamma((n+2)/2) / Gamma((n+3)/2), the integral of (1-t^2)^{n/2} over [0,1].
double beta_integral(int n) { return 0.5 * kSqrtPi * gamma_half(n + 2) / gamma_half(n + 3); }

double tolerance_for(double rhs) { return kReportTolerance * std::max(1.0, std::abs(rhs)); }

}  // namespace

BoundReport make_inequality_report(std::string name, std::string inputs, double lhs, double rhs) {
  BoundReport r{std::move(name), std::move(inputs), lhs, rhs, rhs - lhs, false};
  r.pass = r.slack >= -tolerance_for(rhs);
  return r;
}

BoundReport make_equality_report(std::string name, std::string inputs, double lhs, double rhs) {
  BoundReport r{std::move(name), std::move(inputs), lhs, rhs, 0.0 - std::abs(rhs - lhs), false};
  r.pass = r.slack >= -tolerance_for(rhs);
  return r;
}

double gamma_half(int twice_x) {
  if (twice_x < 1) throw InvalidInput("gamma_half needs a positive argument");
  if (twice_x % 2 == 0) {
    // Gamma(m) = (m-1)!
    double r = 1.0;
    for (int j = 2; j < twice_x / 2; ++j) r *= j;
    return r;
  }
  // Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!) = sqrt(pi) prod_{j=1}^{m} (j - 1/2)
  double r = kSqrtPi;
  for (int j = 1; j <= twice_x / 2; ++j) r *= j - 0.5;
  return r;
}

double lemma_sum(const BoundQuery& q) {
  validate(q);
  const double reach = std::sqrt(q.y) / q.a;
  if (reach > 1e10) throw ResourceLimit("lemma sum would need more than 1e10 terms");
  const auto top = static_cast<std::int64_t>(std::floor(reach));
  double sum = 0.0;
  for (std::int64_t i = 1; i <= top; ++i) {
    const double ai = q.a * static_cast<double>(i);
    sum += pow_half(std::max(0.0, q.y - ai * ai), q.n);
  }
  return sum;
}

double lemma32_rhs(const BoundQuery& q) {
  validate(q);
  return beta_integral(q.n) / q.a * pow_half(q.y, q.n + 1);
}

double lemma31_rhs(const BoundQuery& q) {
  validate(q);
  if (q.n != 1 && q.n != 2) throw InvalidInput("the concavity bound holds for n = 1 or 2 only");
  const double n = q.n;
  const double corner = std::pow(2.0 * q.a * n, n / 2.0) / std::pow(n + 2.0, (n + 2.0) / 2.0);
  return lemma32_rhs(q) - 0.5 * pow_half(q.y, q.n) + corner * std::pow(q.y, n / 4.0);
}

double lemma41_rhs(const Cuboid& box, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw InvalidInput("lambda must be >= 0");
  const double a1 = box.a1();
  return std::pow(lambda, 1.5) / (6.0 * kPi2) - lambda / (8.0 * kPi * a1) +
         std::sqrt(lambda) / (16.0 * a1 * a1);
}

BoundReport cube_eigenvalue_bound(std::int64_t k, double nu_k) {
  const double kk = static_cast<double>(k);
  return make_inequality_report(
      "cube_eigenvalue_bound", "k=" + std::to_string(k) + ";nu=" + format_real(nu_k),
      std::pow(nu_k, 1.5), 6.0 * kPi2 * kk + 3.0 * kPi * nu_k * (0.5 + kSqrt3));
}

double a1_lower_bound() { return 1.0 / (8.0 * (0.5 + kSqrt3)); }

double a3_upper_bound() { return 64.0 * (0.5 + kSqrt3) * (0.5 + kSqrt3); }

double polya_lower_bound(std::int64_t k) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  return std::pow(6.0 * kPi2 * static_cast<double>(k), 2.0 / 3.0);
}

BoundReport delta_minorant(double delta) {
  if (!(delta >= 0.0 && delta <= 399.0)) {
    throw InvalidInput("minorant is stated for 0 <= delta <= 399");
  }
  return make_inequality_report("delta_minorant", "delta=" + format_real(delta),
                                1.0 + 1.5 * delta + 3.0 / 160.0 * delta * delta,
                                std::pow(1.0 + delta, 1.5));
}

BoundReport delta_from_am_gm(double a3_star, double budget) {
  if (!(a3_star >= 1.0 - 1e-9) || !std::isfinite(a3_star)) {
    throw InvalidInput("a3* must be >= 1");
  }
  std::string inputs = "a3=" + format_real(a3_star) + ";budget=" + format_real(budget);
  const double a3 = std::max(a3_star, 1.0);
  BoundReport r = make_inequality_report("am_gm", std::move(inputs), 2.0 * std::sqrt(a3) + 1.0 / a3,
                                         3.0 + budget);
  if (a3 > 400.0) {
    r.inputs += ";out_of_range";
    r.pass = false;
    return r;
  }
  r.pass = r.pass && delta_minorant(a3 - 1.0).pass;
  return r;
}

BoundReport gauss_octant_bound(std::int64_t count_at_nu, double nu) {
  const double excess = std::max(0.0, std::sqrt(nu) / kPi - kSqrt3);
  const double omega3 = 4.0 * kPi / 3.0;
  return make_inequality_report("gauss_octant", "nu=" + format_real(nu),
                                omega3 / 8.0 * excess * excess * excess,
                                static_cast<double>(count_at_nu));
}

std::array<BoundReport, 2> multiplicity_chain(std::int64_t k, std::int64_t count_at_nu,
                                              std::int64_t multiplicity) {
  const std::string inputs = "k=" + std::to_string(k) + ";N=" + std::to_string(count_at_nu) +
                             ";theta=" + std::to_string(multiplicity);
  return {make_inequality_report("chain_lower", inputs, static_cast<double>(k),
                                 static_cast<double>(count_at_nu)),
          make_inequality_report("chain_upper", inputs, static_cast<double>(count_at_nu),
                                 static_cast<double>(k + multiplicity - 1))};
}

RemainderEstimate estimate_remainder_constants(std::span<const Cuboid> boxes,
                                               std::span<const double> lambdas,
                                               const RemainderExponents& exponents) {
  RemainderEstimate est;
  for (const Cuboid& box : boxes) {
    for (double lambda : lambdas) {
      if (lambda < 1.0) continue;
      const double full = static_cast<double>(count_full(box, lambda));
      const double weyl = 4.0 / (3.0 * kPi2) * std::pow(lambda, 1.5);
      est.C = std::max(est.C, std::abs(full - weyl) / std::pow(lambda, exponents.beta / 2.0));
      for (int axis = 1; axis <= 3; ++axis) {
        const double area = box.volume() / box.side(axis - 1) * lambda / kPi;
        const double plane = static_cast<double>(count_plane(box, lambda, axis));
        est.D = std::max(est.D, std::abs(plane - area) / std::pow(lambda, exponents.theta / 2.0));
      }
      ++est.samples;
    }
  }
  return est;
}

}  // namespace boxspec
