#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "guardian/geometry.hpp"
#include "guardian/observation.hpp"

namespace guardian {

enum class DefenderStrategy { PurePursuit, DefenseMargin, AdjustedDefenseMargin };

// Static is a fixture for one-step margin experiments with a motionless
// attacker; it is never part of the 3x3 experiment grid.
enum class AttackerBehavior { Linear, Spiral, Intelligent, Static };

/// How the intelligent attacker weights its evade-the-defender direction.
///   InverseDistance: k1 = 1 / |xd_hat - xa| on the unit evade direction.
///   Unit: the evade direction enters with weight 1 (un-normalized reading).
enum class EvasionWeight { InverseDistance, Unit };

inline constexpr DefenderStrategy kDefenderStrategies[] = {
    DefenderStrategy::PurePursuit, DefenderStrategy::DefenseMargin,
    DefenderStrategy::AdjustedDefenseMargin};
inline constexpr AttackerBehavior kAttackerBehaviors[] = {
    AttackerBehavior::Linear, AttackerBehavior::Spiral, AttackerBehavior::Intelligent};

std::string_view name_of(DefenderStrategy s);
std::string_view name_of(AttackerBehavior b);
std::string_view name_of(EvasionWeight w);
std::optional<DefenderStrategy> parse_defender(std::string_view name);
std::optional<AttackerBehavior> parse_attacker(std::string_view name);
std::optional<EvasionWeight> parse_evasion(std::string_view name);

/// Admissible control: a direction with norm at most one.
struct ControlInput {
  Vec2 direction;
};

class DegenerateRadiusError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Defender guidance laws. They see only the observation y, never the true
// attacker position.
ControlInput pp_control(Vec2 y, Vec2 xd);
ControlInput dm_control(Vec2 y, Vec2 xd);
ControlInput adm_control(Vec2 y, Vec2 xd, const NoiseParams& params, double k);

ControlInput defender_control(DefenderStrategy s, Vec2 y, Vec2 xd, const NoiseParams& params,
                              double k);

// Attacker behaviors.
ControlInput linear_attacker(Vec2 xa);
ControlInput spiral_attacker(Vec2 xa);
ControlInput intelligent_attacker(Vec2 xa, Vec2 xd, const NoiseParams& params, Rng& rng,
                                  EvasionWeight weight = EvasionWeight::InverseDistance);

ControlInput attacker_control(AttackerBehavior b, Vec2 xa, Vec2 xd, const NoiseParams& params,
                              Rng& rng, EvasionWeight weight = EvasionWeight::InverseDistance);

}  // namespace guardian
