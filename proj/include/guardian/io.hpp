#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "guardian/engine.hpp"
#include "guardian/experiment.hpp"

namespace guardian {

/// Nine significant digits, printf "%.9g".
std::string format_number(double x);

/// Rounds to nine significant digits so JSON output matches the CSV text.
double round_significant(double x);

inline constexpr const char* kTrajectoryHeader = "t,xa_x,xa_y,xd_x,xd_y,y_x,y_y,margin,reliability";

std::string trajectory_csv(const EpisodeResult& result);

nlohmann::json config_json(const WorldConfig& cfg);

nlohmann::json episode_summary_json(const EpisodeResult& result, const WorldConfig& cfg,
                                    DefenderStrategy defender, AttackerBehavior attacker);

nlohmann::json report_json(const ExperimentReport& report);

/// Win-rate table: rows are defender strategies, columns attacker behaviors.
std::string report_csv(const ExperimentReport& report);

/// Writes via a sibling temporary file and renames it into place, so the
/// target either keeps its old content or receives the full new content.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace guardian
