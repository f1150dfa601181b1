#include "guardian/geometry.hpp"

#include <cstdio>

namespace guardian {

void Zones::validate() const {
  if (!(r_safe > 0.0) || !(r_interest > 0.0)) {
    throw std::invalid_argument("zone radii must be positive");
  }
  if (!(r_safe < r_interest)) {
    throw std::invalid_argument("safe zone radius must be smaller than the zone of interest radius");
  }
}

Vec2 closest_safe_reachable_point(Vec2 xa, Vec2 xd) {
  if (xa == xd) throw CoincidentAgentsError();
  if (norm_squared(xa) <= norm_squared(xd)) return {0.0, 0.0};
  // Foot of the perpendicular from the origin lies along the error direction.
  const Vec2 e = error_vector(xa, xd);
  const double len = norm(e);
  return (defense_margin(xa, xd) / len) * e;
}

double defense_margin(Vec2 xa, Vec2 xd) {
  if (xa == xd) throw CoincidentAgentsError();
  return (norm_squared(xa) - norm_squared(xd)) / (2.0 * norm(xa - xd));
}

std::string to_string(Vec2 v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.9g, %.9g)", v.x, v.y);
  return buf;
}

}  // namespace guardian
