#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "guardian/analysis.hpp"
#include "guardian/engine.hpp"
#include "guardian/strategies.hpp"

namespace guardian {

struct PairResult {
  DefenderStrategy defender = DefenderStrategy::PurePursuit;
  AttackerBehavior attacker = AttackerBehavior::Linear;
  int trials = 0;
  int captured = 0;
  int survived = 0;
  int losses = 0;  // breaches
  RunningStats end_time;

  /// Survived episodes count as defender wins.
  int wins() const { return captured + survived; }
  double win_rate() const { return trials == 0 ? 0.0 : static_cast<double>(wins()) / trials; }
};

struct ExperimentReport {
  WorldConfig config;
  int trials = 0;
  std::uint64_t base_seed = 0;
  std::vector<std::uint64_t> seeds;  // one per trial, shared by every pair
  std::vector<std::pair<Vec2, Vec2>> initial_positions;  // one per trial
  std::int64_t init_rejections = 0;
  std::vector<PairResult> pairs;

  const PairResult* find(DefenderStrategy d, AttackerBehavior a) const;
};

struct MatrixOptions {
  int jobs = 1;
  std::vector<DefenderStrategy> defenders{std::begin(kDefenderStrategies),
                                          std::end(kDefenderStrategies)};
  std::vector<AttackerBehavior> attackers{std::begin(kAttackerBehaviors),
                                          std::end(kAttackerBehaviors)};
  /// When set, every trial starts here instead of drawing spawn positions.
  std::optional<std::pair<Vec2, Vec2>> fixed_start;
  SpawnRanges spawn;
};

/// Per-trial seeds derived from `base_seed`.
std::vector<std::uint64_t> trial_seeds(std::uint64_t base_seed, int trials);

/// Runs every (defender, attacker) pair on the same trial list: trial i uses
/// the same spawn positions and the same episode seed for all pairs. Results
/// do not depend on `jobs`.
ExperimentReport run_experiment_matrix(const WorldConfig& cfg, int trials, std::uint64_t base_seed,
                                       const MatrixOptions& options = {});

}  // namespace guardian
