#include "guardian/strategies.hpp"

#include <cmath>

namespace guardian {
namespace {

constexpr double kHoldTolerance = 1e-12;
constexpr double kBlendTolerance = 1e-9;

Vec2 unit_or_zero(Vec2 v) {
  const double len = norm(v);
  if (len < kHoldTolerance) return {0.0, 0.0};
  return v / len;
}

}  // namespace

std::string_view name_of(DefenderStrategy s) {
  switch (s) {
    case DefenderStrategy::PurePursuit: return "pp";
    case DefenderStrategy::DefenseMargin: return "dm";
    case DefenderStrategy::AdjustedDefenseMargin: return "adm";
  }
  return "?";
}

std::string_view name_of(AttackerBehavior b) {
  switch (b) {
    case AttackerBehavior::Linear: return "linear";
    case AttackerBehavior::Spiral: return "spiral";
    case AttackerBehavior::Intelligent: return "intelligent";
    case AttackerBehavior::Static: return "static";
  }
  return "?";
}

std::string_view name_of(EvasionWeight w) {
  return w == EvasionWeight::InverseDistance ? "inverse-distance" : "unit";
}

std::optional<DefenderStrategy> parse_defender(std::string_view name) {
  for (auto s : kDefenderStrategies) {
    if (name == name_of(s)) return s;
  }
  return std::nullopt;
}

std::optional<AttackerBehavior> parse_attacker(std::string_view name) {
  for (auto b : {AttackerBehavior::Linear, AttackerBehavior::Spiral, AttackerBehavior::Intelligent,
                 AttackerBehavior::Static}) {
    if (name == name_of(b)) return b;
  }
  return std::nullopt;
}

std::optional<EvasionWeight> parse_evasion(std::string_view name) {
  for (auto w : {EvasionWeight::InverseDistance, EvasionWeight::Unit}) {
    if (name == name_of(w)) return w;
  }
  return std::nullopt;
}

ControlInput pp_control(Vec2 y, Vec2 xd) { return {unit_or_zero(y - xd)}; }

ControlInput dm_control(Vec2 y, Vec2 xd) {
  const Vec2 target = closest_safe_reachable_point(y, xd);
  return {unit_or_zero(target - xd)};
}

ControlInput adm_control(Vec2 y, Vec2 xd, const NoiseParams& params, double k) {
  const ControlInput dm = dm_control(y, xd);
  const double p = reliability(y, xd, params, k);
  const Vec2 blend = p * pp_control(y, xd).direction + (1.0 - p) * dm.direction;
  const double len = norm(blend);
  if (len < kBlendTolerance) return dm;
  return {blend / len};
}

ControlInput defender_control(DefenderStrategy s, Vec2 y, Vec2 xd, const NoiseParams& params,
                              double k) {
  switch (s) {
    case DefenderStrategy::PurePursuit: return pp_control(y, xd);
    case DefenderStrategy::DefenseMargin: return dm_control(y, xd);
    case DefenderStrategy::AdjustedDefenseMargin: return adm_control(y, xd, params, k);
  }
  throw std::invalid_argument("unknown defender strategy");
}

ControlInput linear_attacker(Vec2 xa) {
  if (xa == Vec2{}) throw DegenerateRadiusError("linear attacker is already at the origin");
  return {-xa / norm(xa)};
}

ControlInput spiral_attacker(Vec2 xa) {
  const double r = norm(xa);
  if (!(r > 1.0)) throw DegenerateRadiusError("spiral attacker needs |xa| > 1");
  // Aim one unit inward and 1/r radians clockwise.
  const double phi = std::atan2(xa.y, xa.x) - 1.0 / r;
  const Vec2 target = from_polar(r - 1.0, phi);
  const Vec2 d = target - xa;
  return {d / norm(d)};
}

ControlInput intelligent_attacker(Vec2 xa, Vec2 xd, const NoiseParams& params, Rng& rng,
                                  EvasionWeight weight) {
  const Vec2 attack = linear_attacker(xa).direction;
  // The attacker senses the defender through the same sensor model.
  const Vec2 xd_hat = observe(xd, xa, params, rng);
  const Vec2 away = xa - xd_hat;
  const double dist = norm(away);
  if (dist < kHoldTolerance) return {attack};
  const double k1 = weight == EvasionWeight::InverseDistance ? 1.0 / dist : 1.0;
  const Vec2 blend = k1 * (away / dist) + attack;
  const double len = norm(blend);
  if (len < kBlendTolerance) return {attack};
  return {blend / len};
}

ControlInput attacker_control(AttackerBehavior b, Vec2 xa, Vec2 xd, const NoiseParams& params,
                              Rng& rng, EvasionWeight weight) {
  switch (b) {
    case AttackerBehavior::Linear: return linear_attacker(xa);
    case AttackerBehavior::Spiral: return spiral_attacker(xa);
    case AttackerBehavior::Intelligent: return intelligent_attacker(xa, xd, params, rng, weight);
    case AttackerBehavior::Static: return {Vec2{}};
  }
  throw std::invalid_argument("unknown attacker behavior");
}

}  // namespace guardian
