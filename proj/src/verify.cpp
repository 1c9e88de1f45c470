#include "boxspec/verify.hpp"

#include <cmath>
#include <random>

#include "boxspec/error.hpp"
#include "boxspec/lattice.hpp"
#include "boxspec/numfmt.hpp"
#include "boxspec/optimizer.hpp"
#include "boxspec/spectrum.hpp"

namespace boxspec {

namespace {

constexpr double kMaxLambda = 1e4;
constexpr int kLambdasPerBox = 10;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Portable sampling: only the raw mt19937_64 stream is used, never the
// implementation-defined std distributions.
class Sampler {
 public:
  Sampler(std::uint64_t seed, Suite s) : rng_(splitmix(seed ^ splitmix(static_cast<std::uint64_t>(s) + 1))) {}

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Cuboid box() {
    const auto [a1, a2] = SearchBox::standard().from_unit(unit(), unit());
    return Cuboid::from_sides(a1, a2);
  }

 private:
  std::mt19937_64 rng_;
};

std::string box_inputs(const Cuboid& b) {
  return "a1=" + format_real(b.a1()) + ";a2=" + format_real(b.a2()) + ";a3=" + format_real(b.a3());
}

void add(VerifyResult& out, Suite s, BoundReport r) {
  if (!r.pass) ++out.failures;
  out.rows.push_back({std::string(suite_name(s)), std::move(r)});
}

std::string query_inputs(const BoundQuery& q) {
  return "y=" + format_real(q.y) + ";a=" + format_real(q.a) + ";n=" + std::to_string(q.n);
}

void run_lemma(VerifyResult& out, Suite s, std::int64_t samples, std::uint64_t seed) {
  Sampler rng(seed, s);
  for (std::int64_t i = 0; i < samples; ++i) {
    BoundQuery q;
    q.y = rng.uniform(0.0, 1e6);
    q.a = std::pow(10.0, rng.uniform(-2.0, 2.0));
    q.n = s == Suite::lemma31 ? static_cast<int>(rng.integer(1, 2)) : static_cast<int>(rng.integer(1, 6));
    const double rhs = s == Suite::lemma31 ? lemma31_rhs(q) : lemma32_rhs(q);
    add(out, s, make_inequality_report(std::string(suite_name(s)), query_inputs(q), lemma_sum(q), rhs));
  }
}

void run_lemma41(VerifyResult& out, std::int64_t samples, std::uint64_t seed) {
  Sampler rng(seed, Suite::lemma41);
  for (std::int64_t i = 0; i < samples; ++i) {
    const Cuboid box = rng.box();
    for (int j = 0; j < kLambdasPerBox; ++j) {
      const double lambda = rng.uniform(0.0, kMaxLambda);
      add(out, Suite::lemma41,
          make_inequality_report("lemma41", box_inputs(box) + ";lambda=" + format_real(lambda),
                                 static_cast<double>(count_upto(box, lambda)), lemma41_rhs(box, lambda)));
    }
  }
}

void run_identity(VerifyResult& out, std::int64_t samples, std::uint64_t seed) {
  Sampler rng(seed, Suite::identity);
  std::vector<Cuboid> calibration{Cuboid::unit_cube()};
  for (std::int64_t i = 0; i < samples; ++i) {
    const Cuboid box = rng.box();
    if (calibration.size() < 8) calibration.push_back(box);
    double lambda = rng.uniform(0.0, kMaxLambda);
    // Every fourth sample sits exactly on an eigenvalue, i.e. on the ellipsoid.
    if (i % 4 == 3) {
      const std::int64_t below = count_upto(box, lambda);
      if (below > 0) lambda = kth_eigenvalue_value(box, below);
    }
    const CountBundle b = count_bundle(box, lambda);
    std::int64_t rhs = 8 * b.N + 1;
    for (int a = 0; a < 3; ++a) rhs += 4 * b.T_plane_pos[a] + 2 * b.floors[a];
    BoundReport r = make_equality_report(
        "identity",
        box_inputs(box) + ";lambda=" + format_real(lambda) + ";N=" + std::to_string(b.N) +
            ";T=" + std::to_string(b.T),
        static_cast<double>(b.T), static_cast<double>(rhs));
    r.pass = r.pass && b.T == rhs && b.consistent();
    add(out, Suite::identity, std::move(r));
  }
  std::vector<double> lambdas;
  for (int j = 1; j <= 50; ++j) lambdas.push_back(kMaxLambda * j / 50.0);
  out.remainder = estimate_remainder_constants(calibration, lambdas);
}

void run_cube_chain(VerifyResult& out, std::int64_t samples) {
  const Cuboid cube = Cuboid::unit_cube();
  for (std::int64_t k = 1; k <= samples; ++k) {
    const SpectralPoint p = kth_eigenvalue(cube, k);
    const double nu = p.value;
    const auto label = static_cast<std::uint64_t>(std::llround(nu / kPi2));
    const std::int64_t count = count_upto(cube, nu);
    const std::int64_t theta = cube_multiplicity(label);
    for (BoundReport& r : multiplicity_chain(k, count, theta)) add(out, Suite::cube_chain, std::move(r));
    add(out, Suite::cube_chain, gauss_octant_bound(count, nu));
    add(out, Suite::cube_chain, cube_eigenvalue_bound(k, nu));
    add(out, Suite::cube_chain,
        make_equality_report("multiplicity", "k=" + std::to_string(k) + ";m=" + std::to_string(label),
                             static_cast<double>(theta), static_cast<double>(p.multiplicity())));
  }
}

void run_polya(VerifyResult& out, std::int64_t samples, std::uint64_t seed) {
  Sampler rng(seed, Suite::polya);
  for (std::int64_t i = 0; i < samples; ++i) {
    const Cuboid box = rng.box();
    const std::int64_t k = rng.integer(1, 1000);
    add(out, Suite::polya,
        make_inequality_report("polya", box_inputs(box) + ";k=" + std::to_string(k), polya_lower_bound(k),
                               kth_eigenvalue_value(box, k)));
  }
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "lemma31") return Suite::lemma31;
  if (name == "lemma32") return Suite::lemma32;
  if (name == "lemma41") return Suite::lemma41;
  if (name == "identity") return Suite::identity;
  if (name == "cube-chain") return Suite::cube_chain;
  if (name == "polya") return Suite::polya;
  if (name == "all") return Suite::all;
  throw InvalidInput("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::lemma31: return "lemma31";
    case Suite::lemma32: return "lemma32";
    case Suite::lemma41: return "lemma41";
    case Suite::identity: return "identity";
    case Suite::cube_chain: return "cube-chain";
    case Suite::polya: return "polya";
    case Suite::all: return "all";
  }
  return "unknown";
}

VerifyResult run_verify(const VerifyConfig& cfg) {
  if (cfg.samples < 1) throw InvalidInput("verify needs at least one sample");
  VerifyResult out;
  const auto wants = [&](Suite s) { return cfg.suite == Suite::all || cfg.suite == s; };
  if (wants(Suite::lemma31)) run_lemma(out, Suite::lemma31, cfg.samples, cfg.seed);
  if (wants(Suite::lemma32)) run_lemma(out, Suite::lemma32, cfg.samples, cfg.seed);
  if (wants(Suite::lemma41)) run_lemma41(out, cfg.samples, cfg.seed);
  if (wants(Suite::identity)) run_identity(out, cfg.samples, cfg.seed);
  if (wants(Suite::cube_chain)) run_cube_chain(out, cfg.samples);
  if (wants(Suite::polya)) run_polya(out, cfg.samples, cfg.seed);
  return out;
}

}  // namespace boxspec
