#include "guardian/engine.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace guardian {

std::string_view name_of(FailureCriterion c) {
  return c == FailureCriterion::PositionBreach ? "position_breach" : "margin_breach";
}

std::optional<FailureCriterion> parse_failure_criterion(std::string_view name) {
  if (name == "position_breach") return FailureCriterion::PositionBreach;
  if (name == "margin_breach") return FailureCriterion::MarginBreach;
  return std::nullopt;
}

std::string_view name_of(Outcome o) {
  switch (o) {
    case Outcome::Captured: return "Captured";
    case Outcome::Breached: return "Breached";
    case Outcome::Survived: return "Survived";
  }
  return "?";
}

void WorldConfig::validate() const {
  zones.validate();
  noise.validate();
  if (!(tau > 0.0)) throw std::invalid_argument("capture distance tau must be positive");
  if (!(k > 0.0)) throw std::invalid_argument("reliability half-length k must be positive");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
}

namespace {

bool breached(Vec2 xa, Vec2 xd, const WorldConfig& cfg) {
  // The safe zone is the open disk: an attacker standing on its rim has not entered it.
  if (cfg.failure == FailureCriterion::PositionBreach) return norm(xa) < cfg.zones.r_safe;
  return defense_margin(xa, xd) <= cfg.zones.r_safe;
}

StepRecord make_record(const EpisodeState& s, Vec2 y, const WorldConfig& cfg) {
  return {s.t, s.xa, s.xd, y, recorded_margin(s.xa, s.xd),
          reliability(y, s.xd, cfg.noise, cfg.k)};
}

}  // namespace

double recorded_margin(Vec2 xa, Vec2 xd) {
  if (xa == xd) return std::numeric_limits<double>::quiet_NaN();
  return defense_margin(xa, xd);
}

std::optional<Outcome> terminal_outcome(const EpisodeState& state, const WorldConfig& cfg) {
  if (is_captured(state.xa, state.xd, cfg.tau)) return Outcome::Captured;
  if (breached(state.xa, state.xd, cfg)) return Outcome::Breached;
  if (state.t >= cfg.max_steps) return Outcome::Survived;
  return std::nullopt;
}

std::pair<EpisodeState, StepRecord> step(EpisodeState state, DefenderStrategy defender,
                                         AttackerBehavior attacker, const WorldConfig& cfg) {
  if (terminal_outcome(state, cfg)) throw EpisodeTerminatedError();

  const Vec2 y = observe(state.xa, state.xd, cfg.noise, state.rng);
  const Vec2 ud = defender_control(defender, y, state.xd, cfg.noise, cfg.k).direction;
  const Vec2 ua =
      attacker_control(attacker, state.xa, state.xd, cfg.noise, state.rng, cfg.evasion).direction;
  StepRecord record = make_record(state, y, cfg);

  state.xa += ua;
  state.xd += ud;
  ++state.t;
  return {std::move(state), record};
}

void validate_initial_positions(Vec2 xa, Vec2 xd, const WorldConfig& cfg) {
  if (!is_finite(xa) || !is_finite(xd)) {
    throw InvalidInitializationError("initial positions must be finite");
  }
  if (norm(xa) > cfg.zones.r_interest || norm(xd) > cfg.zones.r_interest) {
    throw InvalidInitializationError("initial positions must lie inside the zone of interest");
  }
  if (norm(xa) < cfg.zones.r_safe) {
    throw InvalidInitializationError("attacker starts inside the safe zone");
  }
  if (is_captured(xa, xd, cfg.tau)) {
    throw InvalidInitializationError("agents start within capture distance");
  }
  if (breached(xa, xd, cfg)) {
    throw InvalidInitializationError("failure criterion already satisfied at start");
  }
}

EpisodeResult run_episode(Vec2 init_xa, Vec2 init_xd, DefenderStrategy defender,
                          AttackerBehavior attacker, const WorldConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  validate_initial_positions(init_xa, init_xd, cfg);

  EpisodeResult result;
  result.seed = seed;
  EpisodeState state{0, init_xa, init_xd, Rng(episode_seed(seed))};
  std::optional<Outcome> outcome;
  while (!outcome) {
    auto [next, record] = step(std::move(state), defender, attacker, cfg);
    result.trajectory.push_back(record);
    state = std::move(next);
    outcome = terminal_outcome(state, cfg);
  }
  // Terminal row: the observation the defender would receive at end_time.
  const Vec2 y = observe(state.xa, state.xd, cfg.noise, state.rng);
  result.trajectory.push_back(make_record(state, y, cfg));
  result.outcome = *outcome;
  result.end_time = state.t;
  return result;
}

std::pair<Vec2, Vec2> sample_initial_positions(Rng& rng, const SpawnRanges& ranges) {
  constexpr double pi = std::numbers::pi;
  const double ra = rng.uniform(ranges.attacker_min, ranges.attacker_max);
  const double ta = rng.uniform(-pi, pi);
  const double rd = rng.uniform(ranges.defender_min, ranges.defender_max);
  const double td = rng.uniform(-pi, pi);
  return {from_polar(ra, ta), from_polar(rd, td)};
}

InitialPositions sample_valid_initial_positions(Rng& rng, const WorldConfig& cfg,
                                                const SpawnRanges& ranges) {
  constexpr int kMaxAttempts = 100000;
  InitialPositions out;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto [xa, xd] = sample_initial_positions(rng, ranges);
    try {
      validate_initial_positions(xa, xd, cfg);
    } catch (const InvalidInitializationError&) {
      ++out.rejections;
      continue;
    }
    out.xa = xa;
    out.xd = xd;
    return out;
  }
  throw InvalidInitializationError("spawn ranges never produce a valid initial configuration");
}

std::uint64_t spawn_seed(std::uint64_t trial_seed) { return mix_seed(trial_seed ^ 0x5350415755ULL); }
std::uint64_t episode_seed(std::uint64_t trial_seed) { return mix_seed(trial_seed ^ 0x4550495344ULL); }

}  // namespace guardian
