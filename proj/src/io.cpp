#include "guardian/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace guardian {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

double round_significant(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

namespace {

nlohmann::json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_significant(x);
}

nlohmann::json vec(Vec2 v) { return nlohmann::json::array({number(v.x), number(v.y)}); }

}  // namespace

std::string trajectory_csv(const EpisodeResult& result) {
  std::ostringstream out;
  out << kTrajectoryHeader << '\n';
  for (const StepRecord& r : result.trajectory) {
    out << r.t;
    for (double v : {r.xa.x, r.xa.y, r.xd.x, r.xd.y, r.y.x, r.y.y, r.margin, r.reliability}) {
      out << ',' << format_number(v);
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json config_json(const WorldConfig& cfg) {
  return {
      {"r_interest", number(cfg.zones.r_interest)},
      {"r_safe", number(cfg.zones.r_safe)},
      {"tau", number(cfg.tau)},
      {"beta", number(cfg.noise.beta_d)},
      {"beta_b", number(cfg.noise.beta_b)},
      {"beta_v", number(cfg.noise.beta_v)},
      {"nu", number(cfg.noise.nu)},
      {"k", number(cfg.k)},
      {"max_steps", cfg.max_steps},
      {"failure_criterion", std::string(name_of(cfg.failure))},
      {"evasion", std::string(name_of(cfg.evasion))},
  };
}

nlohmann::json episode_summary_json(const EpisodeResult& result, const WorldConfig& cfg,
                                    DefenderStrategy defender, AttackerBehavior attacker) {
  nlohmann::json j;
  j["outcome"] = std::string(name_of(result.outcome));
  j["end_time"] = result.end_time;
  j["seed"] = result.seed;
  j["defender"] = std::string(name_of(defender));
  j["attacker"] = std::string(name_of(attacker));
  j["init_rejections"] = result.init_rejections;
  if (!result.trajectory.empty()) {
    j["initial_xa"] = vec(result.trajectory.front().xa);
    j["initial_xd"] = vec(result.trajectory.front().xd);
    j["final_xa"] = vec(result.trajectory.back().xa);
    j["final_xd"] = vec(result.trajectory.back().xd);
  }
  j["config"] = config_json(cfg);
  return j;
}

nlohmann::json report_json(const ExperimentReport& report) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const PairResult& p : report.pairs) {
    pairs.push_back({
        {"defender", std::string(name_of(p.defender))},
        {"attacker", std::string(name_of(p.attacker))},
        {"trials", p.trials},
        {"wins", p.wins()},
        {"losses", p.losses},
        {"captured", p.captured},
        {"survived", p.survived},
        {"win_rate", number(p.win_rate())},
        {"mean_end_time", number(p.end_time.mean())},
    });
  }
  nlohmann::json j;
  j["pairs"] = std::move(pairs);
  j["trials"] = report.trials;
  j["base_seed"] = report.base_seed;
  j["seeds"] = report.seeds;
  j["init_rejections"] = report.init_rejections;
  j["config"] = config_json(report.config);
  return j;
}

std::string report_csv(const ExperimentReport& report) {
  std::vector<DefenderStrategy> rows;
  std::vector<AttackerBehavior> cols;
  for (const PairResult& p : report.pairs) {
    if (std::find(rows.begin(), rows.end(), p.defender) == rows.end()) rows.push_back(p.defender);
    if (std::find(cols.begin(), cols.end(), p.attacker) == cols.end()) cols.push_back(p.attacker);
  }
  std::ostringstream out;
  out << "defender";
  for (auto a : cols) out << ',' << name_of(a);
  out << '\n';
  for (auto d : rows) {
    out << name_of(d);
    for (auto a : cols) {
      const PairResult* p = report.find(d, a);
      out << ',' << (p ? format_number(p->win_rate()) : std::string());
    }
    out << '\n';
  }
  return out.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace guardian
