#include "guardian/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <vector>

#include "guardian/strategies.hpp"

namespace guardian {
namespace {

std::string format(const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

Vec2 uniform_in_disk(Rng& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform01());
  return from_polar(r, rng.uniform(-std::numbers::pi, std::numbers::pi));
}

bool margin_gain_applies(Vec2 xa, Vec2 xd) {
  return norm(xa - xd) > std::numbers::sqrt2 && norm(xa) > norm(xd);
}

double noiseless_gain(Vec2 xa, Vec2 xd, DefenderStrategy s, Rng& rng) {
  return one_step_delta_rho(xa, xd, s, NoiseParams::exact(), 0.5, rng, Vec2{});
}

}  // namespace

CheckResult check_one_step_margin_gain(int n, std::uint64_t seed, const SpawnRanges& ranges) {
  Rng rng(seed);
  double worst_pp = 0.0;
  double min_dm = std::numeric_limits<double>::infinity();
  int pp_fail = 0;
  int dm_fail = 0;
  for (int i = 0; i < n;) {
    const auto [xa, xd] = sample_initial_positions(rng, ranges);
    if (!margin_gain_applies(xa, xd)) continue;
    ++i;
    const double pp = noiseless_gain(xa, xd, DefenderStrategy::PurePursuit, rng);
    const double dm = noiseless_gain(xa, xd, DefenderStrategy::DefenseMargin, rng);
    worst_pp = std::max(worst_pp, std::abs(pp - 0.5));
    min_dm = std::min(min_dm, dm);
    pp_fail += std::abs(pp - 0.5) > 1e-9;
    dm_fail += dm < 0.5 - 1e-9;
  }
  return {"one-step margin gain (PP = 1/2, DM >= 1/2)", pp_fail == 0 && dm_fail == 0,
          format("n=%d max|dPP-0.5|=%.3g min dDM=%.9g pp_fail=%d dm_fail=%d", n, worst_pp, min_dm,
                 pp_fail, dm_fail)};
}

MarginGainSurvey survey_dm_margin_gain(int n, std::uint64_t seed, double r) {
  Rng rng(seed);
  MarginGainSurvey s;
  s.worst_gain = std::numeric_limits<double>::infinity();
  while (s.configurations < n) {
    const Vec2 xa = uniform_in_disk(rng, r);
    const Vec2 xd = uniform_in_disk(rng, r);
    if (!margin_gain_applies(xa, xd)) continue;
    ++s.configurations;
    const double dm = noiseless_gain(xa, xd, DefenderStrategy::DefenseMargin, rng);
    if (dm < 0.5 - 1e-9) ++s.below_half;
    if (dm < s.worst_gain) {
      s.worst_gain = dm;
      s.worst_xa = xa;
      s.worst_xd = xd;
    }
  }
  return s;
}

CheckResult check_margin_against_grid(int n, std::uint64_t seed, const MarginFunction& margin,
                                      double tolerance, double disk_radius) {
  Rng rng(seed);
  double worst = 0.0;
  int failures = 0;
  for (int i = 0; i < n;) {
    const Vec2 xa = uniform_in_disk(rng, disk_radius);
    const Vec2 xd = uniform_in_disk(rng, disk_radius);
    if (!(norm(xa) > norm(xd))) continue;
    ++i;
    const double err = std::abs(margin(xa, xd) - norm(grid_closest_safe_reachable_point(xa, xd)));
    worst = std::max(worst, err);
    failures += !(err <= tolerance);
  }
  return {"defense margin vs grid oracle", failures == 0,
          format("n=%d max_abs_err=%.3g tol=%.3g failures=%d", n, worst, tolerance, failures)};
}

CheckResult check_reliability_properties() {
  std::vector<double> ks;
  std::vector<double> sigmas;
  for (int i = 1; i <= 20; ++i) ks.push_back(0.1 * i);
  for (int i = 1; i <= 50; ++i) sigmas.push_back(0.1 * i);

  int violations = 0;
  auto in_range = [](double p) { return p >= 0.0 && p <= 1.0; };
  for (double k : ks) {
    violations += reliability({3.0, 4.0}, {0.0, 0.0}, NoiseParams::exact(), k) != 1.0;
    for (std::size_t j = 0; j < sigmas.size(); ++j) {
      violations += !in_range(square_mass(sigmas[j], k));
      if (j + 1 == sigmas.size()) continue;
      // Strictly decreasing in sigma; the miss mass resolves saturated cells.
      violations += square_mass(sigmas[j], k) < square_mass(sigmas[j + 1], k);
      violations += !(square_miss_mass(sigmas[j], k) < square_miss_mass(sigmas[j + 1], k));
    }
  }
  for (double sigma : sigmas) {
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
      violations += square_mass(sigma, ks[i]) > square_mass(sigma, ks[i + 1]);
      violations += !(square_miss_mass(sigma, ks[i]) > square_miss_mass(sigma, ks[i + 1]));
    }
  }
  return {"reliability range and monotonicity", violations == 0,
          format("grid=%zux%zu violations=%d", ks.size(), sigmas.size(), violations)};
}

CheckResult check_stability(Vec2 e, Vec2 ua, const NoiseParams& params, int n, std::uint64_t seed,
                            StabilityDiagnostic* out) {
  Rng rng(seed);
  const StabilityDiagnostic d = stability_diagnostic(e, ua, params, n, rng);
  if (out) *out = d;
  const bool consistent = d.e_cos_alpha >= -1.0 && d.e_cos_alpha <= 1.0 &&
                          d.condition_holds == (d.lhs <= d.e_cos_alpha);
  return {"stability diagnostic", consistent,
          format("lhs=%.9g e_cos_alpha=%.9g n=%d condition_holds=%s", d.lhs, d.e_cos_alpha,
                 d.n_samples, d.condition_holds ? "true" : "false")};
}

CheckResult check_fleeing_pursuit(Vec2 xa, Vec2 xd, int steps, double tolerance) {
  const double start = norm(xa - xd);
  double worst = 0.0;
  for (int t = 0; t < steps; ++t) {
    const Vec2 e = xa - xd;
    const Vec2 ud = pp_control(xa, xd).direction;
    xa += e / norm(e);
    xd += ud;
    worst = std::max(worst, std::abs(norm(xa - xd) - norm(e)));
  }
  return {"pure pursuit vs fleeing attacker keeps |e| constant", worst <= tolerance,
          format("steps=%d |e0|=%.9g max_step_change=%.3g", steps, start, worst)};
}

}  // namespace guardian
