#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "guardian/geometry.hpp"

namespace guardian {

/// Coefficients of the distance-scaled Gaussian sensor model.
///   sigma^2 = beta_b + beta_d * |e|^2 + beta_v * (1 - nu)
struct NoiseParams {
  double beta_b = 0.0;
  double beta_d = 0.05;
  double beta_v = 0.0;
  double nu = 1.0;

  /// Noise-free sensor.
  static constexpr NoiseParams exact() { return {0.0, 0.0, 0.0, 1.0}; }
  /// Distance-only model used throughout the experiments.
  static constexpr NoiseParams distance_only(double beta) { return {0.0, beta, 0.0, 1.0}; }

  void validate() const;
};

/// Seeded random stream with a fixed, build-independent sampling recipe.
///
/// Bits come from std::mt19937_64, whose output sequence is pinned by the
/// standard. Uniforms use the top 53 bits; Gaussians use the basic Box-Muller
/// transform, one pair per call. Standard library distributions are avoided
/// because their algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform on [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Two independent standard normal draws.
  std::pair<double, double> normal_pair();

  friend bool operator==(const Rng& a, const Rng& b) {
    return a.seed_ == b.seed_ && a.engine_ == b.engine_;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t value);

double sigma_squared(double e_norm, const NoiseParams& params);

/// Noisy attacker observation y = xa + w, w ~ N(0, sigma^2 I), sigma^2 from |xa - xd|.
/// Always consumes exactly one normal pair from `rng`.
Vec2 observe(Vec2 xa, Vec2 xd, const NoiseParams& params, Rng& rng);

/// Standard normal CDF.
double normal_cdf(double x);

/// Probability mass of N(0, sigma_hat^2 I) inside [-k, k]^2, where sigma_hat
/// is estimated from the observation distance |y - xd|. Returns 1 when
/// sigma_hat is zero.
double reliability(Vec2 y, Vec2 xd, const NoiseParams& params, double k);

/// Same quantity for an explicit per-axis standard deviation.
double square_mass(double sigma, double k);

/// 1 - square_mass(sigma, k), evaluated without cancellation so it stays
/// resolvable where square_mass rounds to 1.
double square_miss_mass(double sigma, double k);

}  // namespace guardian
