#include "guardian/observation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace guardian {

void NoiseParams::validate() const {
  if (!(beta_b >= 0.0) || !(beta_d >= 0.0) || !(beta_v >= 0.0)) {
    throw std::invalid_argument("noise coefficients must be non-negative");
  }
  if (!(nu >= 0.0 && nu <= 1.0)) throw std::invalid_argument("visibility nu must lie in [0, 1]");
}

std::pair<double, double> Rng::normal_pair() {
  // u1 in (0, 1] keeps the logarithm finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::uint64_t mix_seed(std::uint64_t value) {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

double sigma_squared(double e_norm, const NoiseParams& params) {
  return params.beta_b + params.beta_d * e_norm * e_norm + params.beta_v * (1.0 - params.nu);
}

Vec2 observe(Vec2 xa, Vec2 xd, const NoiseParams& params, Rng& rng) {
  const double sigma = std::sqrt(sigma_squared(norm(xa - xd), params));
  const auto [z1, z2] = rng.normal_pair();
  if (sigma == 0.0) return xa;
  return {xa.x + sigma * z1, xa.y + sigma * z2};
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double square_mass(double sigma, double k) {
  if (sigma == 0.0) return 1.0;
  // Phi(k/s) - Phi(-k/s) = erf(k / (s sqrt 2)); the axes are independent.
  const double axis = std::erf(k / (sigma * std::numbers::sqrt2));
  return axis * axis;
}

double square_miss_mass(double sigma, double k) {
  if (sigma == 0.0) return 0.0;
  const double tail = std::erfc(k / (sigma * std::numbers::sqrt2));
  return tail * (2.0 - tail);
}

double reliability(Vec2 y, Vec2 xd, const NoiseParams& params, double k) {
  return square_mass(std::sqrt(sigma_squared(norm(y - xd), params)), k);
}

}  // namespace guardian
