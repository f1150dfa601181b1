#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "guardian/analysis.hpp"
#include "guardian/engine.hpp"

namespace guardian {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

using MarginFunction = std::function<double(Vec2, Vec2)>;

// Noise-free, static-attacker margin sweep over configurations drawn from the
// spawn distributions (|e| > sqrt 2 and |xa| > |xd| enforced by rejection):
// PP must gain exactly 1/2, DM at least 1/2.
CheckResult check_one_step_margin_gain(int n, std::uint64_t seed, const SpawnRanges& ranges = {});

// Fraction of uniform-disk configurations (radius r, same rejection rules)
// where the DM gain falls below 1/2. Diagnostic only.
struct MarginGainSurvey {
  int configurations = 0;
  int below_half = 0;
  double worst_gain = 0.0;
  Vec2 worst_xa;
  Vec2 worst_xd;
};
MarginGainSurvey survey_dm_margin_gain(int n, std::uint64_t seed, double r);

// |margin(xa, xd) - |grid oracle point|| <= tolerance over n uniform-disk
// configurations with |xa| > |xd|.
CheckResult check_margin_against_grid(int n, std::uint64_t seed,
                                      const MarginFunction& margin = defense_margin,
                                      double tolerance = 2e-3, double disk_radius = 50.0);

// Range, zero-noise and strict-monotonicity properties of the reliability
// score on k in {0.1, ..., 2} x sigma in {0.1, ..., 5}.
CheckResult check_reliability_properties();

// Evaluates the PP stability diagnostic and checks its internal consistency.
CheckResult check_stability(Vec2 e, Vec2 ua, const NoiseParams& params, int n, std::uint64_t seed,
                            StabilityDiagnostic* out = nullptr);

// Noise-free PP against an attacker fleeing along e: |e| must stay constant.
CheckResult check_fleeing_pursuit(Vec2 xa, Vec2 xd, int steps, double tolerance = 1e-9);

}  // namespace guardian
