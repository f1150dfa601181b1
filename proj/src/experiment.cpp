#include "guardian/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace guardian {

const PairResult* ExperimentReport::find(DefenderStrategy d, AttackerBehavior a) const {
  for (const auto& p : pairs) {
    if (p.defender == d && p.attacker == a) return &p;
  }
  return nullptr;
}

std::vector<std::uint64_t> trial_seeds(std::uint64_t base_seed, int trials) {
  std::vector<std::uint64_t> seeds;
  seeds.reserve(static_cast<std::size_t>(std::max(trials, 0)));
  for (int i = 0; i < trials; ++i) seeds.push_back(mix_seed(base_seed + static_cast<std::uint64_t>(i)));
  return seeds;
}

namespace {

struct EpisodeSummary {
  Outcome outcome = Outcome::Survived;
  int end_time = 0;
};

// Runs task(i) for i in [0, count) on `jobs` threads. The first exception
// thrown by any task is rethrown on the caller's thread.
template <typename Task>
void parallel_for(std::size_t count, int jobs, Task&& task) {
  const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, 256));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            task(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

ExperimentReport run_experiment_matrix(const WorldConfig& cfg, int trials, std::uint64_t base_seed,
                                       const MatrixOptions& options) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  cfg.validate();

  ExperimentReport report;
  report.config = cfg;
  report.trials = trials;
  report.base_seed = base_seed;
  report.seeds = trial_seeds(base_seed, trials);

  for (std::uint64_t seed : report.seeds) {
    if (options.fixed_start) {
      validate_initial_positions(options.fixed_start->first, options.fixed_start->second, cfg);
      report.initial_positions.push_back(*options.fixed_start);
      continue;
    }
    Rng spawn_rng(spawn_seed(seed));
    const InitialPositions init = sample_valid_initial_positions(spawn_rng, cfg, options.spawn);
    report.init_rejections += init.rejections;
    report.initial_positions.emplace_back(init.xa, init.xd);
  }

  std::vector<std::pair<DefenderStrategy, AttackerBehavior>> grid;
  for (auto d : options.defenders) {
    for (auto a : options.attackers) grid.emplace_back(d, a);
  }

  const std::size_t n_trials = static_cast<std::size_t>(trials);
  std::vector<EpisodeSummary> summaries(grid.size() * n_trials);
  parallel_for(summaries.size(), options.jobs, [&](std::size_t idx) {
    const auto [defender, attacker] = grid[idx / n_trials];
    const std::size_t trial = idx % n_trials;
    const auto& [xa, xd] = report.initial_positions[trial];
    const EpisodeResult r = run_episode(xa, xd, defender, attacker, cfg, report.seeds[trial]);
    summaries[idx] = {r.outcome, r.end_time};
  });

  // Aggregate in fixed index order.
  for (std::size_t g = 0; g < grid.size(); ++g) {
    PairResult pr;
    pr.defender = grid[g].first;
    pr.attacker = grid[g].second;
    pr.trials = trials;
    for (std::size_t t = 0; t < n_trials; ++t) {
      const EpisodeSummary& s = summaries[g * n_trials + t];
      switch (s.outcome) {
        case Outcome::Captured: ++pr.captured; break;
        case Outcome::Survived: ++pr.survived; break;
        case Outcome::Breached: ++pr.losses; break;
      }
      pr.end_time.add(s.end_time);
    }
    report.pairs.push_back(pr);
  }
  return report;
}

}  // namespace guardian
