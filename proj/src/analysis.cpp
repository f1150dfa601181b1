#include "guardian/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace guardian {

void RunningStats::add(double x) {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double total = static_cast<double>(n_ + other.n_);
  const double delta = other.mean_ - mean_;
  mean_ += delta * static_cast<double>(other.n_) / total;
  m2_ += other.m2_ + delta * delta * static_cast<double>(n_) * static_cast<double>(other.n_) / total;
  n_ += other.n_;
}

double RunningStats::variance() const {
  return n_ < 2 ? 0.0 : m2_ / static_cast<double>(n_ - 1);
}

double RunningStats::standard_error() const {
  return n_ < 1 ? 0.0 : std::sqrt(variance() / static_cast<double>(n_));
}

double stability_lhs(Vec2 e, Vec2 ua) {
  const double denom = norm(e + ua);
  if (!(denom > 1e-12)) throw DegenerateDenominatorError("|e + ua| vanishes");
  return (dot(e, ua) + 1.0) / denom;
}

CosAlphaEstimate estimate_expected_cos_alpha(Vec2 e, Vec2 ua, const NoiseParams& params, int n,
                                             Rng& rng) {
  const double e_norm = norm(e);
  if (!(e_norm > std::numbers::sqrt2)) {
    throw std::invalid_argument("stability estimate requires |e| > sqrt(2)");
  }
  if (n < 1) throw std::invalid_argument("sample count must be at least 1");
  const Vec2 target = e + ua;
  const double target_norm = norm(target);
  if (!(target_norm > 1e-12)) throw DegenerateDenominatorError("|e + ua| vanishes");

  const double sigma = std::sqrt(sigma_squared(e_norm, params));
  const std::int64_t max_draws = 1000LL * n + 1000;
  CosAlphaEstimate out;
  RunningStats stats;
  std::int64_t draws = 0;
  while (stats.count() < n) {
    if (++draws > max_draws) {
      throw std::runtime_error("noise too large: |w| < |e| is almost never satisfied");
    }
    const auto [z1, z2] = rng.normal_pair();
    const Vec2 w{sigma * z1, sigma * z2};
    if (norm(w) >= e_norm) {
      ++out.rejections;
      continue;
    }
    const Vec2 seen = e + w;
    stats.add(dot(seen, target) / (norm(seen) * target_norm));
  }
  out.mean = std::clamp(stats.mean(), -1.0, 1.0);
  out.std_error = stats.standard_error();
  out.n_samples = n;
  return out;
}

StabilityDiagnostic stability_diagnostic(Vec2 e, Vec2 ua, const NoiseParams& params, int n,
                                         Rng& rng) {
  StabilityDiagnostic d;
  d.lhs = stability_lhs(e, ua);
  const CosAlphaEstimate est = estimate_expected_cos_alpha(e, ua, params, n, rng);
  d.e_cos_alpha = est.mean;
  d.n_samples = est.n_samples;
  d.rejections = est.rejections;
  d.condition_holds = d.lhs <= d.e_cos_alpha;
  return d;
}

double one_step_delta_rho(Vec2 xa, Vec2 xd, DefenderStrategy strategy, const NoiseParams& params,
                          double k, Rng& rng, Vec2 attacker_motion) {
  const double before = defense_margin(xa, xd);
  const Vec2 y = observe(xa, xd, params, rng);
  const Vec2 ud = defender_control(strategy, y, xd, params, k).direction;
  return defense_margin(xa + attacker_motion, xd + ud) - before;
}

DeltaRhoEstimate estimate_mean_delta_rho(DefenderStrategy strategy, const NoiseParams& params,
                                         double k, int n, Rng& rng, MarginTestMotion motion) {
  if (n < 1) throw std::invalid_argument("sample count must be at least 1");
  constexpr double pi = std::numbers::pi;
  RunningStats stats;
  for (int i = 0; i < n; ++i) {
    const double ra = rng.uniform(25.0, 40.0);
    const double ta = rng.uniform(-pi, pi);
    const double rd = rng.uniform(0.0, 15.0);
    const double td = rng.uniform(-pi, pi);
    const Vec2 xa = from_polar(ra, ta);
    const Vec2 xd = from_polar(rd, td);
    const Vec2 motion_step =
        motion == MarginTestMotion::Linear ? linear_attacker(xa).direction : Vec2{};
    stats.add(one_step_delta_rho(xa, xd, strategy, params, k, rng, motion_step));
  }
  return {strategy, stats.mean(), stats.standard_error(), n};
}

namespace {

// Smallest radius at which the ray along `dir` is inside the attacker's half
// plane, or +inf if it never enters within `far`.
double entry_radius(Vec2 xa, Vec2 xd, Vec2 dir, double far) {
  auto inside = [&](double r) {
    const Vec2 p = r * dir;
    return norm_squared(p - xa) <= norm_squared(p - xd);
  };
  if (inside(0.0)) return 0.0;
  if (!inside(far)) return std::numeric_limits<double>::infinity();
  double lo = 0.0;
  double hi = far;
  for (int i = 0; i < 80 && hi - lo > 1e-13 * far; ++i) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

Vec2 grid_closest_safe_reachable_point(Vec2 xa, Vec2 xd, double resolution) {
  if (xa == xd) throw CoincidentAgentsError();
  const double far = 1e3 * (norm(xa) + norm(xd) + 1.0);
  auto direction = [](double theta) { return Vec2{std::cos(theta), std::sin(theta)}; };

  double best_theta = 0.0;
  double best_r = std::numeric_limits<double>::infinity();
  const int coarse = static_cast<int>(std::ceil(2.0 * std::numbers::pi / resolution));
  for (int i = 0; i < coarse; ++i) {
    const double theta = -std::numbers::pi + i * resolution;
    const double r = entry_radius(xa, xd, direction(theta), far);
    if (r == 0.0) return {0.0, 0.0};
    if (r < best_r) {
      best_r = r;
      best_theta = theta;
    }
  }
  const double fine = resolution * 1e-3;
  const double center = best_theta;
  for (int i = -2000; i <= 2000; ++i) {
    const double theta = center + i * fine;
    const double r = entry_radius(xa, xd, direction(theta), far);
    if (r < best_r) {
      best_r = r;
      best_theta = theta;
    }
  }
  return best_r * direction(best_theta);
}

}  // namespace guardian
