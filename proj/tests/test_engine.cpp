#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "guardian/engine.hpp"

using namespace guardian;

namespace {

WorldConfig noiseless() {
  WorldConfig cfg;
  cfg.noise = NoiseParams::exact();
  return cfg;
}

bool same_trajectory(const EpisodeResult& a, const EpisodeResult& b) {
  if (a.trajectory.size() != b.trajectory.size()) return false;
  for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
    const StepRecord& p = a.trajectory[i];
    const StepRecord& q = b.trajectory[i];
    if (p.t != q.t || !(p.xa == q.xa) || !(p.xd == q.xd) || !(p.y == q.y)) return false;
    if (p.reliability != q.reliability) return false;
    if (p.margin != q.margin && !(std::isnan(p.margin) && std::isnan(q.margin))) return false;
  }
  return a.outcome == b.outcome && a.end_time == b.end_time;
}

}  // namespace

TEST_CASE("pure pursuit closes on a static attacker one unit per step") {
  const WorldConfig cfg = noiseless();
  EpisodeState s{0, {10, 0}, {0, 0}, Rng(1)};
  auto [next, record] = step(s, DefenderStrategy::PurePursuit, AttackerBehavior::Static, cfg);
  CHECK(next.xd == Vec2{1, 0});
  CHECK(next.xa == Vec2{10, 0});
  CHECK(norm(next.xa - next.xd) == 9.0);
  CHECK(next.t == 1);
  CHECK(record.t == 0);
  CHECK(record.xd == Vec2{0, 0});
  CHECK(record.margin == 5.0);
}

TEST_CASE("countdown capture at t = 8") {
  const WorldConfig cfg = noiseless();
  const EpisodeResult r =
      run_episode({10, 0}, {0, 0}, DefenderStrategy::PurePursuit, AttackerBehavior::Static, cfg, 1);
  CHECK(r.outcome == Outcome::Captured);
  CHECK(r.end_time == 8);
  REQUIRE(r.trajectory.size() == 9);
  for (std::size_t t = 0; t < r.trajectory.size(); ++t) {
    CHECK(norm(r.trajectory[t].xa - r.trajectory[t].xd) == 10.0 - static_cast<double>(t));
  }
}

TEST_CASE("stepping a finished episode is an error") {
  const WorldConfig cfg = noiseless();
  EpisodeState s{8, {10, 0}, {8, 0}, Rng(1)};
  CHECK_THROWS_AS(step(s, DefenderStrategy::PurePursuit, AttackerBehavior::Static, cfg),
                  EpisodeTerminatedError);
}

TEST_CASE("initial position validation") {
  const WorldConfig cfg;
  auto run = [&](Vec2 xa, Vec2 xd) {
    return run_episode(xa, xd, DefenderStrategy::PurePursuit, AttackerBehavior::Linear, cfg, 1);
  };
  CHECK_THROWS_AS(run({5, 0}, {20, 0}), InvalidInitializationError);
  CHECK_THROWS_AS(run({60, 0}, {0, 0}), InvalidInitializationError);
  CHECK_THROWS_AS(run({30, 0}, {0, 55}), InvalidInitializationError);
  CHECK_THROWS_AS(run({30, 0}, {29, 0}), InvalidInitializationError);
  CHECK_THROWS_AS(run({std::numeric_limits<double>::quiet_NaN(), 0}, {0, 0}),
                  InvalidInitializationError);
  CHECK_NOTHROW(validate_initial_positions({10, 0}, {0, 0}, cfg));

  WorldConfig margin = cfg;
  margin.failure = FailureCriterion::MarginBreach;
  CHECK_THROWS_AS(validate_initial_positions({30, 0}, {0, 28}, margin), InvalidInitializationError);
  CHECK_NOTHROW(validate_initial_positions({30, 0}, {0, 0}, margin));
}

TEST_CASE("capture wins a simultaneous capture and breach") {
  const WorldConfig cfg = noiseless();
  const EpisodeResult r = run_episode({10.5, 0}, {7, 0}, DefenderStrategy::PurePursuit,
                                      AttackerBehavior::Linear, cfg, 3);
  CHECK(r.outcome == Outcome::Captured);
  CHECK(r.end_time == 1);
  CHECK(norm(r.trajectory.back().xa) < cfg.zones.r_safe);
}

TEST_CASE("breach against an undefended attacker") {
  WorldConfig cfg = noiseless();
  const EpisodeResult r =
      run_episode({0, 30}, {0, -40}, DefenderStrategy::PurePursuit, AttackerBehavior::Linear, cfg, 3);
  CHECK(r.outcome == Outcome::Breached);
  CHECK(r.end_time == 21);
  CHECK_FALSE(r.defender_won());
}

TEST_CASE("horizon ends in survival") {
  WorldConfig cfg = noiseless();
  cfg.max_steps = 5;
  const EpisodeResult r =
      run_episode({40, 0}, {0, 0}, DefenderStrategy::PurePursuit, AttackerBehavior::Static, cfg, 3);
  CHECK(r.outcome == Outcome::Survived);
  CHECK(r.end_time == 5);
  CHECK(r.defender_won());
}

TEST_CASE("episodes are reproducible per seed") {
  const WorldConfig cfg;
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    Rng spawn(spawn_seed(seed));
    const InitialPositions init = sample_valid_initial_positions(spawn, cfg);
    for (auto d : kDefenderStrategies) {
      for (auto a : kAttackerBehaviors) {
        const EpisodeResult x = run_episode(init.xa, init.xd, d, a, cfg, seed);
        const EpisodeResult y = run_episode(init.xa, init.xd, d, a, cfg, seed);
        CHECK(same_trajectory(x, y));
      }
    }
  }
}

TEST_CASE("episode invariants over random starts") {
  for (auto failure : {FailureCriterion::PositionBreach, FailureCriterion::MarginBreach}) {
    WorldConfig cfg;
    cfg.failure = failure;
    cfg.max_steps = 400;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Rng spawn(spawn_seed(seed));
      const InitialPositions init = sample_valid_initial_positions(spawn, cfg);
      for (auto d : kDefenderStrategies) {
        for (auto a : kAttackerBehaviors) {
          const EpisodeResult r = run_episode(init.xa, init.xd, d, a, cfg, seed);
          REQUIRE(r.trajectory.size() == static_cast<std::size_t>(r.end_time) + 1);
          for (std::size_t t = 0; t < r.trajectory.size(); ++t) {
            const StepRecord& s = r.trajectory[t];
            CHECK(s.t == static_cast<int>(t));
            if (!(s.xa == s.xd)) CHECK(std::abs(s.margin - defense_margin(s.xa, s.xd)) <= 1e-12);
            CHECK(s.reliability >= 0.0);
            CHECK(s.reliability <= 1.0);
            if (t + 1 < r.trajectory.size()) {
              const StepRecord& n = r.trajectory[t + 1];
              CHECK(norm(n.xa - s.xa) <= 1.0 + 1e-12);
              CHECK(norm(n.xd - s.xd) <= 1.0 + 1e-12);
              // No terminal event before end_time.
              CHECK(norm(s.xa - s.xd) > cfg.tau);
            }
          }
          const StepRecord& last = r.trajectory.back();
          const bool captured = norm(last.xa - last.xd) <= cfg.tau;
          const bool breached = failure == FailureCriterion::PositionBreach
                                    ? norm(last.xa) < cfg.zones.r_safe
                                    : defense_margin(last.xa, last.xd) <= cfg.zones.r_safe;
          switch (r.outcome) {
            case Outcome::Captured: CHECK(captured); break;
            case Outcome::Breached:
              CHECK_FALSE(captured);
              CHECK(breached);
              break;
            case Outcome::Survived:
              CHECK(r.end_time == cfg.max_steps);
              CHECK_FALSE(captured);
              CHECK_FALSE(breached);
              break;
          }
        }
      }
    }
  }
}

TEST_CASE("spawn sampling") {
  SUBCASE("ranges") {
    Rng rng(7);
    for (int i = 0; i < 100000; ++i) {
      const auto [xa, xd] = sample_initial_positions(rng);
      REQUIRE(norm(xa) >= 45.0 - 1e-12);
      REQUIRE(norm(xa) <= 50.0 + 1e-12);
      REQUIRE(norm(xd) <= 20.0 + 1e-12);
    }
  }
  SUBCASE("attacker angle is uniform") {
    Rng rng(8);
    constexpr int kBins = 20;
    constexpr int kSamples = 100000;
    std::array<int, kBins> counts{};
    for (int i = 0; i < kSamples; ++i) {
      const Vec2 xa = sample_initial_positions(rng).first;
      const double u = (std::atan2(xa.y, xa.x) + std::numbers::pi) / (2.0 * std::numbers::pi);
      ++counts[std::min(kBins - 1, static_cast<int>(u * kBins))];
    }
    const double expected = static_cast<double>(kSamples) / kBins;
    double chi2 = 0.0;
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    // 99.9th percentile of chi-square with 19 degrees of freedom.
    CHECK(chi2 < 43.82);
  }
  SUBCASE("fixed seed gives the same pair") {
    Rng a(9);
    Rng b(9);
    CHECK(sample_initial_positions(a) == sample_initial_positions(b));
  }
  SUBCASE("valid sampling rejects captured starts") {
    SpawnRanges tight{45.0, 46.0, 44.0, 46.0};
    const WorldConfig cfg;
    Rng rng(10);
    int rejections = 0;
    for (int i = 0; i < 200; ++i) {
      const InitialPositions p = sample_valid_initial_positions(rng, cfg, tight);
      CHECK(norm(p.xa - p.xd) > cfg.tau);
      rejections += p.rejections;
    }
    CHECK(rejections > 0);
  }
}

TEST_CASE("trial streams are distinct") {
  CHECK(spawn_seed(1) != episode_seed(1));
  CHECK(spawn_seed(1) != spawn_seed(2));
}

TEST_CASE("world config validation") {
  WorldConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.tau = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = WorldConfig{};
  cfg.max_steps = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = WorldConfig{};
  cfg.k = -1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
