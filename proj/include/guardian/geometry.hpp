#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace guardian {

/// Planar position or direction in normalized distance units.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend constexpr Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
  friend constexpr Vec2 operator/(Vec2 v, double s) { return {v.x / s, v.y / s}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double norm_squared(Vec2 v) { return dot(v, v); }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Rotation about the origin by `angle` radians (counter-clockwise).
inline Vec2 rotated(Vec2 v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

inline Vec2 from_polar(double radius, double angle) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

/// Raised when an operation needs two distinct agent positions.
class CoincidentAgentsError : public std::domain_error {
 public:
  CoincidentAgentsError() : std::domain_error("attacker and defender positions coincide") {}
};

/// Origin-centered zone of interest and safe zone.
struct Zones {
  double r_interest = 50.0;
  double r_safe = 10.0;

  /// Throws std::invalid_argument unless 0 < r_safe < r_interest.
  void validate() const;
};

/// Attacker position minus defender position.
constexpr Vec2 error_vector(Vec2 xa, Vec2 xd) { return xa - xd; }

/// Capture fires when the agents are within `tau`, boundary included.
inline bool is_captured(Vec2 xa, Vec2 xd, double tau) { return norm(xa - xd) <= tau; }

// Point of the attacker's safe reachable half-plane {l : |l - xa| <= |l - xd|}
// nearest to the origin. When the origin is itself reachable (|xa| <= |xd|)
// the origin is returned.
Vec2 closest_safe_reachable_point(Vec2 xa, Vec2 xd);

// Signed distance from the origin to the bisector of xa-xd, positive when the
// origin lies on the defender's side. Equals |closest_safe_reachable_point|
// whenever |xa| > |xd|.
double defense_margin(Vec2 xa, Vec2 xd);

std::string to_string(Vec2 v);

}  // namespace guardian
