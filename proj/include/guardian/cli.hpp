#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "guardian/engine.hpp"

namespace guardian::cli {

enum class OutputFormat { Csv, Json, Both };

struct RunConfig {
  WorldConfig world;
  std::string defender = "adm";
  std::string attacker = "linear";
  int trials = 1000;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "out";
  OutputFormat output_format = OutputFormat::Both;
  std::optional<Vec2> xa;
  std::optional<Vec2> xd;
  int jobs = 1;

  bool writes_csv() const { return output_format != OutputFormat::Json; }
  bool writes_json() const { return output_format != OutputFormat::Csv; }
};

struct CheckOptions {
  bool stability_only = false;
  Vec2 e{3.0, 0.0};
  Vec2 ua{-1.0, 0.0};
  int samples = 100000;
  int sweep = 10000;
  int grid_configs = 200;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kSeedEnvVar = "GUARDIAN_SIM_SEED";

/// Applies the keys of a flat JSON document on top of `cfg`. Unknown keys and
/// ill-typed values raise ConfigError.
void apply_config_json(const nlohmann::json& doc, RunConfig& cfg);

/// Parses a config file; malformed JSON raises ConfigError.
nlohmann::json read_config_file(const std::filesystem::path& path);

/// Reads and applies a config file.
void apply_config_file(const std::filesystem::path& path, RunConfig& cfg);

DefenderStrategy resolve_defender(const std::string& name);
AttackerBehavior resolve_attacker(const std::string& name);

// Subcommands. Exit codes: run -> 0 defender win, 1 breach, 2 config error;
// matrix -> 0 or 2; check -> 0 all pass, 1 any failure, 2 config error.
int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_matrix(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& cfg, const CheckOptions& opts, std::ostream& out,
              std::ostream& err);

/// Full command line entry point; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace guardian::cli
