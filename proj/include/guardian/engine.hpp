#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "guardian/geometry.hpp"
#include "guardian/observation.hpp"
#include "guardian/strategies.hpp"

namespace guardian {

enum class FailureCriterion { PositionBreach, MarginBreach };

std::string_view name_of(FailureCriterion c);
std::optional<FailureCriterion> parse_failure_criterion(std::string_view name);

/// World parameters. Defaults reproduce the reference experiment setup.
struct WorldConfig {
  Zones zones;
  double tau = 2.0;
  NoiseParams noise;
  double k = 0.5;
  int max_steps = 10000;
  FailureCriterion failure = FailureCriterion::PositionBreach;
  EvasionWeight evasion = EvasionWeight::InverseDistance;

  void validate() const;
};

struct EpisodeState {
  int t = 0;
  Vec2 xa;
  Vec2 xd;
  Rng rng{0};
};

/// Per-time-step record. `y` and `reliability` describe the observation the
/// defender acted on at time t.
struct StepRecord {
  int t = 0;
  Vec2 xa;
  Vec2 xd;
  Vec2 y;
  double margin = 0.0;
  double reliability = 0.0;
};

enum class Outcome { Captured, Breached, Survived };

std::string_view name_of(Outcome o);

struct EpisodeResult {
  Outcome outcome = Outcome::Survived;
  int end_time = 0;
  std::vector<StepRecord> trajectory;
  std::uint64_t seed = 0;
  int init_rejections = 0;

  bool defender_won() const { return outcome != Outcome::Breached; }
};

class InvalidInitializationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EpisodeTerminatedError : public std::logic_error {
 public:
  EpisodeTerminatedError() : std::logic_error("step called on a terminated episode") {}
};

/// Outcome fired by the current state, if any. Capture is checked first.
std::optional<Outcome> terminal_outcome(const EpisodeState& state, const WorldConfig& cfg);

/// Margin for trace recording; NaN when the agents coincide.
double recorded_margin(Vec2 xa, Vec2 xd);

/// One simultaneous move. Draw order on the episode stream: the defender's
/// observation first, then the intelligent attacker's sensing (if any).
std::pair<EpisodeState, StepRecord> step(EpisodeState state, DefenderStrategy defender,
                                         AttackerBehavior attacker, const WorldConfig& cfg);

/// Throws InvalidInitializationError when the start state is not a legal,
/// non-terminal configuration inside the zone of interest.
void validate_initial_positions(Vec2 xa, Vec2 xd, const WorldConfig& cfg);

EpisodeResult run_episode(Vec2 init_xa, Vec2 init_xd, DefenderStrategy defender,
                          AttackerBehavior attacker, const WorldConfig& cfg, std::uint64_t seed);

/// Polar spawn ranges for the two agents.
struct SpawnRanges {
  double attacker_min = 45.0;
  double attacker_max = 50.0;
  double defender_min = 0.0;
  double defender_max = 20.0;
};

/// One raw draw: radius and angle uniform for each agent (attacker first).
std::pair<Vec2, Vec2> sample_initial_positions(Rng& rng, const SpawnRanges& ranges = {});

struct InitialPositions {
  Vec2 xa;
  Vec2 xd;
  int rejections = 0;
};

/// Redraws until the pair passes validate_initial_positions.
InitialPositions sample_valid_initial_positions(Rng& rng, const WorldConfig& cfg,
                                                const SpawnRanges& ranges = {});

/// Seeds used by a trial: one stream for the spawn draw, one for the episode.
std::uint64_t spawn_seed(std::uint64_t trial_seed);
std::uint64_t episode_seed(std::uint64_t trial_seed);

}  // namespace guardian
