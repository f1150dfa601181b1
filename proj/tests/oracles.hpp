#pragma once

// Reference computations for the unit and acceptance tests. They deliberately
// avoid the closed forms used by the library.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "guardian/geometry.hpp"
#include "guardian/observation.hpp"

namespace oracle {

using guardian::Vec2;

inline bool reachable_first(Vec2 p, Vec2 xa, Vec2 xd) {
  const double da = std::hypot(p.x - xa.x, p.y - xa.y);
  const double dd = std::hypot(p.x - xd.x, p.y - xd.y);
  return da <= dd;
}

// Nearest point to the origin of {p : |p - xa| <= |p - xd|}. If the origin is
// reachable it wins; otherwise the answer lies on the bisector, which is
// scanned densely and then narrowed by ternary search on |p(s)|.
inline Vec2 closest_point(Vec2 xa, Vec2 xd) {
  if (reachable_first({0.0, 0.0}, xa, xd)) return {0.0, 0.0};
  const Vec2 mid{0.5 * (xa.x + xd.x), 0.5 * (xa.y + xd.y)};
  const double dx = xa.x - xd.x;
  const double dy = xa.y - xd.y;
  const double len = std::hypot(dx, dy);
  const Vec2 along{-dy / len, dx / len};
  auto at = [&](double s) { return Vec2{mid.x + s * along.x, mid.y + s * along.y}; };
  auto dist = [&](double s) {
    const Vec2 p = at(s);
    return std::hypot(p.x, p.y);
  };
  const double span = std::hypot(mid.x, mid.y) + 1.0;
  const int cells = 4000;
  double best_s = -span;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= cells; ++i) {
    const double s = -span + 2.0 * span * i / cells;
    if (dist(s) < best) {
      best = dist(s);
      best_s = s;
    }
  }
  double lo = best_s - 2.0 * span / cells;
  double hi = best_s + 2.0 * span / cells;
  for (int i = 0; i < 200; ++i) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (dist(m1) < dist(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return at(0.5 * (lo + hi));
}

// Composite Simpson weights on n (even) intervals.
inline double simpson_weight(int i, int n) {
  if (i == 0 || i == n) return 1.0;
  return i % 2 ? 4.0 : 2.0;
}

// Mass of N(0, sigma^2 I) on [-k, k]^2 by 2D Simpson quadrature of the density.
inline double square_mass(double sigma, double k) {
  int n = static_cast<int>(std::ceil(2.0 * k / (sigma / 12.0)));
  n = std::max(n, 200);
  n += n % 2;
  const double h = 2.0 * k / n;
  const double norm = 1.0 / (2.0 * std::numbers::pi * sigma * sigma);
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = -k + i * h;
    double row = 0.0;
    for (int j = 0; j <= n; ++j) {
      const double y = -k + j * h;
      row += simpson_weight(j, n) * std::exp(-(x * x + y * y) / (2.0 * sigma * sigma));
    }
    sum += simpson_weight(i, n) * row;
  }
  return norm * sum * h * h / 9.0;
}

// E[cos angle(e + w, e + ua)] for w ~ N(0, sigma^2 I) restricted to |w| < |e|,
// integrated in polar coordinates (Simpson in radius, periodic trapezoid in
// angle) and normalized by the truncated mass.
inline double expected_cos_alpha(Vec2 e, Vec2 ua, double sigma, int radial = 2000,
                                 int angular = 1440) {
  const double e_norm = std::hypot(e.x, e.y);
  const Vec2 target{e.x + ua.x, e.y + ua.y};
  const double t_norm = std::hypot(target.x, target.y);
  const double rmax = std::min(e_norm, 12.0 * sigma);
  const double hr = rmax / radial;
  const double ht = 2.0 * std::numbers::pi / angular;
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i <= radial; ++i) {
    const double r = i * hr;
    const double density = r * std::exp(-r * r / (2.0 * sigma * sigma));
    double ring = 0.0;
    for (int j = 0; j < angular; ++j) {
      const double th = j * ht;
      const Vec2 seen{e.x + r * std::cos(th), e.y + r * std::sin(th)};
      const double sn = std::hypot(seen.x, seen.y);
      if (sn == 0.0) continue;
      ring += (seen.x * target.x + seen.y * target.y) / (sn * t_norm);
    }
    const double w = simpson_weight(i, radial) * density;
    num += w * ring;
    den += w * angular;
  }
  return num / den;
}

// Margin of the pair recomputed from the oracle point.
inline double margin(Vec2 xa, Vec2 xd) {
  const Vec2 p = closest_point(xa, xd);
  return std::hypot(p.x, p.y);
}

inline Vec2 uniform_in_disk(guardian::Rng& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform01());
  const double th = rng.uniform(-std::numbers::pi, std::numbers::pi);
  return {r * std::cos(th), r * std::sin(th)};
}

}  // namespace oracle
