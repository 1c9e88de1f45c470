#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "boxspec/error.hpp"
#include "boxspec/lattice.hpp"
#include "boxspec/numfmt.hpp"
#include "boxspec/optimizer.hpp"
#include "boxspec/report.hpp"
#include "boxspec/spectrum.hpp"
#include "boxspec/verify.hpp"

namespace boxspec {

namespace {

constexpr double kMinTolerance = 1e3 * std::numeric_limits<double>::epsilon();

struct GlobalOptions {
  int threads = 1;
  std::uint64_t seed = 0;
  std::string format;  // empty: per-command default
  std::string out;
};

struct SpectrumArgs {
  double a1 = 0.0;
  double a2 = 0.0;
  std::int64_t k = 0;
  std::int64_t k_max = 0;
};

struct CountArgs {
  double a1 = 0.0;
  double a2 = 0.0;
  double lambda = 0.0;
};

struct OptimizeArgs {
  std::int64_t k = 0;
  std::int64_t k_min = 0;
  std::int64_t k_max = 0;
  bool dyadic = false;
  OptimizerConfig cfg;
};

struct VerifyArgs {
  std::string suite = "all";
  std::int64_t samples = 1000;
};

std::string resolve_format(const GlobalOptions& g, const char* fallback) {
  const std::string f = g.format.empty() ? fallback : g.format;
  if (f != "csv" && f != "json") throw InvalidInput("--format must be csv or json");
  return f;
}

// Renders into a buffer first so a failure never leaves a truncated file.
void emit(const GlobalOptions& g, std::ostream& out, const std::function<void(std::ostream&)>& render) {
  std::ostringstream buf;
  render(buf);
  if (g.out.empty()) {
    out << buf.str();
    out.flush();
    return;
  }
  std::ofstream file(g.out, std::ios::binary | std::ios::trunc);
  if (!file) throw InvalidInput("cannot open output file '" + g.out + "'");
  file << buf.str();
  if (!file) throw InvalidInput("failed writing '" + g.out + "'");
}

int cmd_spectrum(const GlobalOptions& g, const SpectrumArgs& a, std::ostream& out) {
  const std::int64_t k = a.k > 0 ? a.k : a.k_max;
  if (k < 1) throw InvalidInput("k must be >= 1");
  const Cuboid box = Cuboid::from_sides(a.a1, a.a2);
  const std::vector<SpectralPoint> points = lowest_eigenvalues(box, k);
  const std::string fmt = resolve_format(g, "json");
  emit(g, out, [&](std::ostream& os) {
    if (fmt == "csv") {
      write_spectrum_csv(os, box, points, k);
    } else {
      os << spectrum_json(box, points, k).dump(2) << '\n';
    }
  });
  return kExitOk;
}

int cmd_count(const GlobalOptions& g, const CountArgs& a, std::ostream& out, std::ostream& err) {
  if (!std::isfinite(a.lambda) || a.lambda < 0.0) throw InvalidInput("lambda must be finite and >= 0");
  const Cuboid box = Cuboid::from_sides(a.a1, a.a2);
  const CountBundle b = count_bundle(box, a.lambda);
  const std::string fmt = resolve_format(g, "json");
  emit(g, out, [&](std::ostream& os) {
    if (fmt == "csv") {
      write_bundle_csv(os, box, b);
    } else {
      os << bundle_json(box, b).dump(2) << '\n';
    }
  });
  err << "identity " << (b.consistent() ? "OK" : "FAILED") << '\n';
  return b.consistent() ? kExitOk : kExitVerifyFailed;
}

void print_sweep_summary(std::span<const OptimalRecord> records, std::ostream& err) {
  double max_a3 = 0.0;
  double min_a1 = std::numeric_limits<double>::infinity();
  std::size_t ok = 0;
  for (const OptimalRecord& r : records) {
    if (!r.cuboid) continue;
    max_a3 = std::max(max_a3, r.cuboid->a3());
    min_a1 = std::min(min_a1, r.cuboid->a1());
    ok += r.converged() ? 1 : 0;
  }
  err << "records " << records.size() << ", converged " << ok;
  if (std::isfinite(min_a1)) err << ", max a3* " << format_real(max_a3) << ", min a1* " << format_real(min_a1);
  err << '\n';
  try {
    const RateFit fit = rate_fit(records);
    err << "fitted delta exponent " << format_real(fit.exponent) << " (r^2 " << format_real(fit.r_squared)
        << ", " << fit.points << " points; proven bound " << format_real(RateFit::kTheoretical) << ")\n";
  } catch (const InsufficientData&) {
    err << "k range too short for a rate fit\n";
  }
}

int cmd_optimize(const GlobalOptions& g, OptimizeArgs a, std::ostream& out, std::ostream& err) {
  std::vector<std::int64_t> ks;
  if (a.k != 0) {
    if (a.k < 1) throw InvalidInput("k must be >= 1");
    ks.push_back(a.k);
  } else {
    if (a.k_min < 1 || a.k_max < a.k_min) throw InvalidInput("need 1 <= --k-min <= --k-max");
    if (a.dyadic) {
      ks = dyadic_ks(a.k_min, a.k_max);
      if (ks.empty()) throw InvalidInput("no power of two in [k-min, k-max]");
    } else {
      for (std::int64_t k = a.k_min; k <= a.k_max; ++k) ks.push_back(k);
    }
  }
  if (a.cfg.side_tol < kMinTolerance) throw InvalidInput("--side-tol is below 1e3 machine epsilon");
  if (g.threads < 1) throw InvalidInput("--threads must be >= 1");
  a.cfg.threads = g.threads;
  a.cfg.seed = g.seed;

  const std::vector<OptimalRecord> records = sweep(ks, a.cfg);
  const std::string fmt = resolve_format(g, "csv");
  emit(g, out, [&](std::ostream& os) {
    if (fmt == "csv") {
      write_optimize_csv(os, records);
    } else {
      nlohmann::json rows = nlohmann::json::array();
      for (const OptimalRecord& r : records) rows.push_back(to_json(r));
      os << nlohmann::json{{"schema_version", kSchemaVersion}, {"records", rows}}.dump(2) << '\n';
    }
  });
  print_sweep_summary(records, err);

  const auto failed = [](const OptimalRecord& r) { return !r.cuboid; };
  if (!std::all_of(records.begin(), records.end(), failed)) return kExitOk;
  for (const OptimalRecord& r : records) err << "k=" << r.k << ": " << r.status << '\n';
  const bool capped = std::any_of(records.begin(), records.end(), [](const OptimalRecord& r) {
    return r.status.rfind("error: resource limit", 0) == 0;
  });
  return capped ? kExitResourceLimit : kExitVerifyFailed;
}

int cmd_verify(const GlobalOptions& g, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  VerifyConfig cfg;
  cfg.suite = parse_suite(a.suite);
  cfg.samples = a.samples;
  cfg.seed = g.seed;
  const VerifyResult res = run_verify(cfg);
  const std::string fmt = resolve_format(g, "csv");
  emit(g, out, [&](std::ostream& os) {
    if (fmt == "csv") {
      write_verify_csv(os, res.rows);
    } else {
      nlohmann::json rows = nlohmann::json::array();
      for (const VerifyRow& r : res.rows) rows.push_back(to_json(r));
      os << nlohmann::json{{"schema_version", kSchemaVersion}, {"rows", rows}}.dump(2) << '\n';
    }
  });
  err << res.rows.size() << " checks, " << res.failures << " failures\n";
  if (res.remainder.samples > 0) {
    err << "# empirical remainder constants over " << res.remainder.samples << " samples: C = "
        << format_real(res.remainder.C) << ", D = " << format_real(res.remainder.D) << '\n';
  }
  return res.failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dirichlet spectra of unit-volume boxes", "boxspec"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--threads", g.threads, "worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for sampled suites and random starts");
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "write data to this file instead of stdout");

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "lowest eigenvalues with multiplicities and modes");
  spectrum->add_option("--a1", sa.a1, "first side")->required();
  spectrum->add_option("--a2", sa.a2, "second side; the third is 1/(a1 a2)")->required();
  auto* sk = spectrum->add_option("--k", sa.k, "list lambda_1 .. lambda_k");
  auto* skm = spectrum->add_option("--k-max", sa.k_max, "same as --k");
  sk->excludes(skm);

  CountArgs ca;
  auto* count = app.add_subcommand("count", "lattice counts and the decomposition identity");
  count->add_option("--a1", ca.a1)->required();
  count->add_option("--a2", ca.a2)->required();
  count->add_option("--lambda", ca.lambda)->required();

  OptimizeArgs oa;
  auto* optimize = app.add_subcommand("optimize", "minimise lambda_k over unit-volume boxes");
  auto* ok = optimize->add_option("--k", oa.k, "single k");
  auto* okmin = optimize->add_option("--k-min", oa.k_min);
  auto* okmax = optimize->add_option("--k-max", oa.k_max);
  auto* dyadic = optimize->add_flag("--dyadic", oa.dyadic, "only powers of two in [k-min, k-max]");
  ok->excludes(okmin)->excludes(okmax)->excludes(dyadic);
  okmin->needs(okmax);
  okmax->needs(okmin);
  optimize->add_option("--grid", oa.cfg.grid, "coarse grid points per axis");
  optimize->add_option("--basins", oa.cfg.basins, "grid minima refined by simplex descent");
  optimize->add_option("--max-iter", oa.cfg.max_iter, "simplex iterations per descent");
  optimize->add_option("--side-tol", oa.cfg.side_tol, "simplex convergence tolerance on the sides");
  optimize->add_option("--restarts", oa.cfg.restarts, "simplex restarts per basin");
  optimize->add_option("--random-starts", oa.cfg.random_starts, "extra seeded starting points");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check counting bounds and identities on samples");
  verify->add_option("--suite", va.suite, "lemma31, lemma32, lemma41, identity, cube-chain, polya or all");
  verify->add_option("--samples", va.samples, "samples per suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (*spectrum) return cmd_spectrum(g, sa, out);
    if (*count) return cmd_count(g, ca, out, err);
    if (*optimize) {
      if (oa.k == 0 && !*okmin) throw InvalidInput("optimize needs --k or --k-min/--k-max");
      if (*ok && oa.k < 1) throw InvalidInput("k must be >= 1");
      return cmd_optimize(g, oa, out, err);
    }
    if (*verify) return cmd_verify(g, va, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const ResourceLimit& e) {
    err << "error: resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitBadInput;
}

}  // namespace boxspec
