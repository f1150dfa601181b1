#pragma once

#include <cstdint>
#include <stdexcept>

#include "guardian/geometry.hpp"
#include "guardian/observation.hpp"
#include "guardian/strategies.hpp"

namespace guardian {

/// Welford accumulator; `merge` is associative so partial sums can be combined
/// in any grouping.
class RunningStats {
 public:
  void add(double x);
  void merge(const RunningStats& other);

  std::int64_t count() const { return n_; }
  double mean() const { return mean_; }
  /// Unbiased sample variance; zero for fewer than two samples.
  double variance() const;
  double standard_error() const;

 private:
  std::int64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

class DegenerateDenominatorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (e . ua + 1) / |e + ua|, the left side of the pure-pursuit stability test.
double stability_lhs(Vec2 e, Vec2 ua);

struct CosAlphaEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int n_samples = 0;
  std::int64_t rejections = 0;
};

/// Monte Carlo mean of cos(alpha), the angle between e + w and e + ua, with
/// w ~ N(0, sigma^2 I) conditioned on |w| < |e| by rejection.
/// Requires |e| > sqrt(2) and n >= 1.
CosAlphaEstimate estimate_expected_cos_alpha(Vec2 e, Vec2 ua, const NoiseParams& params, int n,
                                             Rng& rng);

struct StabilityDiagnostic {
  double lhs = 0.0;
  double e_cos_alpha = 0.0;
  int n_samples = 0;
  std::int64_t rejections = 0;
  bool condition_holds = false;
};

StabilityDiagnostic stability_diagnostic(Vec2 e, Vec2 ua, const NoiseParams& params, int n,
                                         Rng& rng);

/// Margin change after one simultaneous step: the defender acts on a sampled
/// observation, the attacker is displaced by `attacker_motion`.
double one_step_delta_rho(Vec2 xa, Vec2 xd, DefenderStrategy strategy, const NoiseParams& params,
                          double k, Rng& rng, Vec2 attacker_motion);

enum class MarginTestMotion { Static, Linear };

struct DeltaRhoEstimate {
  DefenderStrategy strategy = DefenderStrategy::PurePursuit;
  double mean_delta_rho = 0.0;
  double std_error = 0.0;
  int n_samples = 0;
};

/// Mean one-step margin change with |xa| ~ U[25, 40], |xd| ~ U[0, 15] and
/// uniform angles.
DeltaRhoEstimate estimate_mean_delta_rho(DefenderStrategy strategy, const NoiseParams& params,
                                         double k, int n, Rng& rng,
                                         MarginTestMotion motion = MarginTestMotion::Linear);

/// Independent search for the point of {l : |l - xa| <= |l - xd|} nearest the
/// origin. Scans ray directions on an angular grid of step `resolution`,
/// locates each ray's entry into the half-plane by bisection on the membership
/// test, then rescans the best cell at 1000x finer angular resolution.
Vec2 grid_closest_safe_reachable_point(Vec2 xa, Vec2 xd, double resolution = 1e-3);

}  // namespace guardian
