#include "boxspec/optimizer.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "boxspec/bounds.hpp"
#include "boxspec/error.hpp"

namespace boxspec {

namespace {

constexpr double kAgreementTolerance = 1e-8;  // relative, on lambda
constexpr double kDistinctSides = 1e-4;       // absolute, on any side

struct Vertex {
  double u = 0.0;
  double v = 0.0;
  double value = 0.0;
};

class Evaluator {
 public:
  Evaluator(std::int64_t k, const SearchBox& box, const SpectrumLimits& limits)
      : k_(k), box_(box), limits_(limits) {}

  Vertex at(double u, double v) {
    u = std::clamp(u, 0.0, 1.0);
    v = std::clamp(v, 0.0, 1.0);
    const auto [a1, a2] = box_.from_unit(u, v);
    ++calls_;
    return {u, v, kth_eigenvalue_value(Cuboid::from_sides(a1, a2), k_, limits_)};
  }

  std::pair<double, double> sides(const Vertex& p) const { return box_.from_unit(p.u, p.v); }
  std::int64_t calls() const { return calls_; }

 private:
  std::int64_t k_;
  SearchBox box_;
  SpectrumLimits limits_;
  std::int64_t calls_ = 0;
};

// Strict order: smaller value first, then the point closer to the cube
// (lexicographically larger (a1, a2)).
bool better(const Evaluator& f, const Vertex& x, const Vertex& y) {
  if (x.value != y.value) return x.value < y.value;
  return f.sides(x) > f.sides(y);
}

struct Descent {
  Vertex best;
  bool converged = false;
};

// Nelder-Mead without expansion, in the unit-square coordinates; every trial
// point is clamped onto the square so the search never leaves the domain.
Descent simplex_descent(Evaluator& f, const Vertex& start, double step, const OptimizerConfig& cfg) {
  auto offset = [&](double du, double dv) {
    double u = start.u + du;
    double v = start.v + dv;
    if (u > 1.0) u = start.u - du;
    if (v > 1.0) v = start.v - dv;
    return f.at(u, v);
  };
  std::array<Vertex, 3> s{start, offset(step, 0.0), offset(0.0, step)};
  auto order = [&] { std::sort(s.begin(), s.end(), [&](const Vertex& x, const Vertex& y) { return better(f, x, y); }); };

  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    order();
    const auto [b1, b2] = f.sides(s[0]);
    double spread = 0.0;
    for (int i = 1; i < 3; ++i) {
      const auto [c1, c2] = f.sides(s[i]);
      spread = std::max({spread, std::abs(c1 - b1), std::abs(c2 - b2)});
    }
    if (spread < cfg.side_tol) return {s[0], true};

    const double cu = 0.5 * (s[0].u + s[1].u);
    const double cv = 0.5 * (s[0].v + s[1].v);
    const Vertex reflected = f.at(2.0 * cu - s[2].u, 2.0 * cv - s[2].v);
    if (better(f, reflected, s[1])) {
      s[2] = reflected;
      continue;
    }
    const bool outside = better(f, reflected, s[2]);
    const Vertex& anchor = outside ? reflected : s[2];
    const Vertex contracted = f.at(cu + 0.5 * (anchor.u - cu), cv + 0.5 * (anchor.v - cv));
    if (better(f, contracted, anchor)) {
      s[2] = contracted;
      continue;
    }
    for (int i = 1; i < 3; ++i) {
      s[i] = f.at(s[0].u + 0.5 * (s[i].u - s[0].u), s[0].v + 0.5 * (s[i].v - s[0].v));
    }
  }
  order();
  return {s[0], false};
}

struct BasinResult {
  Vertex best;
  double a1 = 0.0;
  double a2 = 0.0;
  bool converged = false;
};

std::vector<Vertex> grid_basins(Evaluator& f, const OptimizerConfig& cfg) {
  const int g = cfg.grid;
  std::vector<Vertex> grid(static_cast<std::size_t>(g) * g);
  auto cell = [&](int i, int j) -> Vertex& { return grid[static_cast<std::size_t>(i) * g + j]; };
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      cell(i, j) = f.at(static_cast<double>(i) / (g - 1), static_cast<double>(j) / (g - 1));
    }
  }
  std::vector<Vertex> minima;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      bool local = true;
      for (int di = -1; di <= 1 && local; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          const int ni = i + di;
          const int nj = j + dj;
          if ((di == 0 && dj == 0) || ni < 0 || nj < 0 || ni >= g || nj >= g) continue;
          if (cell(ni, nj).value < cell(i, j).value) {
            local = false;
            break;
          }
        }
      }
      if (local) minima.push_back(cell(i, j));
    }
  }
  std::sort(minima.begin(), minima.end(), [&](const Vertex& x, const Vertex& y) { return better(f, x, y); });

  std::vector<Vertex> chosen;
  for (const Vertex& m : minima) {
    if (static_cast<int>(chosen.size()) >= cfg.basins) break;
    const auto [a1, a2] = f.sides(m);
    const bool duplicate = std::any_of(chosen.begin(), chosen.end(), [&](const Vertex& c) {
      const auto [c1, c2] = f.sides(c);
      return std::abs(c1 - a1) < 1e-12 && std::abs(c2 - a2) < 1e-12;
    });
    if (!duplicate) chosen.push_back(m);
  }
  return chosen;
}

BasinResult refine(Evaluator& f, const Vertex& start, double step, const OptimizerConfig& cfg) {
  Descent d = simplex_descent(f, start, step, cfg);
  for (int r = 0; r < cfg.restarts; ++r) {
    const Descent again = simplex_descent(f, d.best, 0.25 * step, cfg);
    if (!better(f, again.best, d.best)) {
      d.converged = d.converged && again.converged;
      break;
    }
    d = again;
  }
  const auto [a1, a2] = f.sides(d.best);
  return {d.best, a1, a2, d.converged};
}

void validate(const OptimizerConfig& cfg) {
  if (cfg.grid < 2) throw InvalidInput("optimizer grid needs at least 2 points per axis");
  if (cfg.basins < 1) throw InvalidInput("optimizer needs at least one basin");
  if (cfg.max_iter < 1) throw InvalidInput("optimizer needs max_iter >= 1");
  if (!(cfg.side_tol > 0.0)) throw InvalidInput("side tolerance must be positive");
  if (cfg.restarts < 0 || cfg.random_starts < 0) throw InvalidInput("negative restart count");
}

}  // namespace

SearchBox SearchBox::standard() { return SearchBox{a1_lower_bound(), 1.0}; }

double SearchBox::a2_hi(double a1) const { return 1.0 / std::sqrt(a1); }

bool SearchBox::contains(double a1, double a2, double tol) const {
  return a1 >= a1_lo - tol && a1 <= a1_hi + tol && a2 >= a2_lo(a1) - tol && a2 <= a2_hi(a1) + tol;
}

std::pair<double, double> SearchBox::from_unit(double u, double v) const {
  u = std::clamp(u, 0.0, 1.0);
  v = std::clamp(v, 0.0, 1.0);
  const double a1 = u == 1.0 ? a1_hi : a1_lo + u * (a1_hi - a1_lo);
  const double top = a2_hi(a1);
  const double a2 = v == 1.0 ? top : a1 + v * (top - a1);
  return {a1, a2};
}

double objective(std::int64_t k, double a1, double a2, const SpectrumLimits& limits) {
  if (!SearchBox::standard().contains(a1, a2)) {
    throw InvalidInput("(a1, a2) lies outside the search box");
  }
  return kth_eigenvalue_value(Cuboid::from_sides(a1, a2), k, limits);
}

OptimalRecord optimize_k(std::int64_t k, const OptimizerConfig& cfg) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  validate(cfg);
  const SearchBox box = SearchBox::standard();
  Evaluator f(k, box, cfg.limits);

  std::vector<Vertex> starts = grid_basins(f, cfg);
  if (cfg.random_starts > 0) {
    std::mt19937_64 rng(cfg.seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(k)));
    for (int i = 0; i < cfg.random_starts; ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
      const double v = static_cast<double>(rng() >> 11) * 0x1p-53;
      starts.push_back(f.at(u, v));
    }
  }

  const double step = 1.0 / (cfg.grid - 1);
  std::vector<BasinResult> results;
  results.reserve(starts.size());
  for (const Vertex& s : starts) results.push_back(refine(f, s, step, cfg));

  const BasinResult* best = &results.front();
  for (const BasinResult& r : results) {
    if (better(f, r.best, best->best)) best = &r;
  }
  // Among optima within tolerance, prefer the one closest to the cube.
  const double lambda = best->best.value;
  for (const BasinResult& r : results) {
    if (r.best.value <= lambda * (1.0 + kAgreementTolerance) &&
        std::pair(r.a1, r.a2) > std::pair(best->a1, best->a2)) {
      best = &r;
    }
  }

  OptimalRecord rec;
  rec.k = k;
  rec.cuboid = Cuboid::from_sides(best->a1, best->a2);
  rec.lambda_star = best->best.value;
  rec.delta = rec.cuboid->a3() - 1.0;
  rec.unique_within_tol = true;
  for (const BasinResult& r : results) {
    if (std::abs(r.best.value - rec.lambda_star) > kAgreementTolerance * rec.lambda_star) continue;
    ++rec.restarts_agreeing;
    const Cuboid c = Cuboid::from_sides(r.a1, r.a2);
    for (int i = 0; i < 3; ++i) {
      if (std::abs(c.side(i) - rec.cuboid->side(i)) > kDistinctSides) rec.unique_within_tol = false;
    }
  }
  rec.evaluations = f.calls();
  rec.status = best->converged ? "ok" : "max_iter";
  return rec;
}

std::vector<OptimalRecord> sweep(std::span<const std::int64_t> ks, const OptimizerConfig& cfg) {
  if (ks.empty()) throw InvalidInput("sweep needs at least one k");
  validate(cfg);
  std::vector<OptimalRecord> out(ks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ks.size(); i = next++) {
      std::string error;
      try {
        out[i] = optimize_k(ks[i], cfg);
        continue;
      } catch (const ResourceLimit& e) {
        error = std::string("error: resource limit: ") + e.what();
      } catch (const std::exception& e) {
        error = std::string("error: ") + e.what();
      }
      OptimalRecord failed;
      failed.k = ks[i];
      failed.lambda_star = std::nan("");
      failed.delta = std::nan("");
      failed.unique_within_tol = false;
      failed.status = std::move(error);
      out[i] = std::move(failed);
    }
  };
  const int threads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(ks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return out;
}

std::vector<std::int64_t> dyadic_ks(std::int64_t k_min, std::int64_t k_max) {
  if (k_min < 1 || k_max < k_min) throw InvalidInput("need 1 <= k_min <= k_max");
  std::vector<std::int64_t> ks;
  for (std::int64_t k = 1; k <= k_max; k *= 2) {
    if (k >= k_min) ks.push_back(k);
  }
  return ks;
}

RateFit rate_fit(std::span<const OptimalRecord> records) {
  std::int64_t k_lo = 0;
  std::int64_t k_hi = 0;
  std::size_t usable = 0;
  std::vector<std::pair<double, double>> pts;
  for (const OptimalRecord& r : records) {
    if (!r.converged() || !r.cuboid) continue;
    ++usable;
    k_lo = k_lo == 0 ? r.k : std::min(k_lo, r.k);
    k_hi = std::max(k_hi, r.k);
    if (r.delta > 1e-6) pts.emplace_back(std::log(static_cast<double>(r.k)), std::log(r.delta));
  }
  if (usable < 10 || k_hi < 100 * k_lo) {
    throw InsufficientData("rate fit needs >= 10 records spanning >= 2 decades of k");
  }
  if (pts.size() < 2) throw InsufficientData("rate fit needs >= 2 records with delta > 1e-6");

  const double n = static_cast<double>(pts.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0) throw InsufficientData("rate fit needs distinct k values");
  RateFit fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : sxy * sxy / (sxx * syy);
  fit.points = pts.size();
  return fit;
}

double median_delta(std::span<const OptimalRecord> records, std::int64_t k_lo, std::int64_t k_hi) {
  std::vector<double> d;
  for (const OptimalRecord& r : records) {
    if (r.converged() && r.cuboid && r.k >= k_lo && r.k <= k_hi) d.push_back(r.delta);
  }
  if (d.empty()) throw InsufficientData("no converged records in the requested k window");
  std::sort(d.begin(), d.end());
  const std::size_t m = d.size() / 2;
  return d.size() % 2 == 1 ? d[m] : 0.5 * (d[m - 1] + d[m]);
}

DecadeTrend decade_trend(std::span<const OptimalRecord> records) {
  DecadeTrend t;
  for (const OptimalRecord& r : records) {
    if (!r.converged() || !r.cuboid) continue;
    t.k_min = t.k_min == 0 ? r.k : std::min(t.k_min, r.k);
    t.k_max = std::max(t.k_max, r.k);
  }
  if (t.k_min == 0 || t.k_max < 10 * t.k_min) {
    throw InsufficientData("decade trend needs k spanning at least one decade");
  }
  t.bottom_median = median_delta(records, t.k_min, 10 * t.k_min - 1);
  t.top_median = median_delta(records, t.k_max / 10 + 1, t.k_max);
  return t;
}

}  // namespace boxspec
