#include "guardian/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "guardian/checks.hpp"
#include "guardian/experiment.hpp"
#include "guardian/io.hpp"

namespace guardian::cli {
namespace {

std::string join_names(std::initializer_list<std::string_view> names) {
  std::string s;
  for (auto n : names) {
    if (!s.empty()) s += ", ";
    s += n;
  }
  return s;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  if (s == "both") return OutputFormat::Both;
  throw ConfigError("unknown output format '" + s + "' (valid: csv, json, both)");
}

FailureCriterion resolve_failure(const std::string& s) {
  if (auto c = parse_failure_criterion(s)) return *c;
  throw ConfigError("unknown failure criterion '" + s + "' (valid: position_breach, margin_breach)");
}

EvasionWeight resolve_evasion(const std::string& s) {
  if (auto w = parse_evasion(s)) return *w;
  throw ConfigError("unknown evasion weight '" + s + "' (valid: inverse-distance, unit)");
}

Vec2 vec_from(const std::vector<double>& v, const char* what) {
  if (v.size() != 2) throw ConfigError(std::string(what) + " needs exactly two numbers");
  return {v[0], v[1]};
}

template <typename T>
T get_as(const nlohmann::json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

std::uint64_t seed_from_env() {
  const char* raw = std::getenv(kSeedEnvVar);
  if (!raw) return 0;
  try {
    std::size_t used = 0;
    const std::string s(raw);
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string(kSeedEnvVar) + " is not an unsigned integer");
  }
}

void validate(const RunConfig& cfg) {
  try {
    cfg.world.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (cfg.trials < 1) throw ConfigError("trials must be at least 1");
  if (cfg.jobs < 1) throw ConfigError("jobs must be at least 1");
  if (cfg.xa.has_value() != cfg.xd.has_value()) {
    throw ConfigError("--xa and --xd must be given together");
  }
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string());
}

void print_check(std::ostream& out, const CheckResult& r) {
  out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
}

}  // namespace

void apply_config_json(const nlohmann::json& doc, RunConfig& cfg) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "defender") cfg.defender = get_as<std::string>(value, key);
    else if (key == "attacker") cfg.attacker = get_as<std::string>(value, key);
    else if (key == "trials") cfg.trials = get_as<int>(value, key);
    else if (key == "seed") cfg.seed = get_as<std::uint64_t>(value, key);
    else if (key == "output_dir") cfg.output_dir = get_as<std::string>(value, key);
    else if (key == "output_format") cfg.output_format = parse_format(get_as<std::string>(value, key));
    else if (key == "beta") cfg.world.noise.beta_d = get_as<double>(value, key);
    else if (key == "beta_b") cfg.world.noise.beta_b = get_as<double>(value, key);
    else if (key == "beta_v") cfg.world.noise.beta_v = get_as<double>(value, key);
    else if (key == "nu") cfg.world.noise.nu = get_as<double>(value, key);
    else if (key == "k") cfg.world.k = get_as<double>(value, key);
    else if (key == "tau") cfg.world.tau = get_as<double>(value, key);
    else if (key == "r_safe") cfg.world.zones.r_safe = get_as<double>(value, key);
    else if (key == "r_interest") cfg.world.zones.r_interest = get_as<double>(value, key);
    else if (key == "max_steps") cfg.world.max_steps = get_as<int>(value, key);
    else if (key == "failure_criterion") cfg.world.failure = resolve_failure(get_as<std::string>(value, key));
    else if (key == "evasion") cfg.world.evasion = resolve_evasion(get_as<std::string>(value, key));
    else if (key == "xa") cfg.xa = vec_from(get_as<std::vector<double>>(value, key), "xa");
    else if (key == "xd") cfg.xd = vec_from(get_as<std::vector<double>>(value, key), "xd");
    else if (key == "jobs") cfg.jobs = get_as<int>(value, key);
    else throw ConfigError("unknown config key '" + key + "'");
  }
}

nlohmann::json read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("malformed config file " + path.string() + ": " + e.what());
  }
}

void apply_config_file(const std::filesystem::path& path, RunConfig& cfg) {
  apply_config_json(read_config_file(path), cfg);
}

DefenderStrategy resolve_defender(const std::string& name) {
  if (auto s = parse_defender(name)) return *s;
  throw ConfigError("unknown defender strategy '" + name + "' (valid: " +
                    join_names({"pp", "dm", "adm"}) + ")");
}

AttackerBehavior resolve_attacker(const std::string& name) {
  if (auto b = parse_attacker(name)) return *b;
  throw ConfigError("unknown attacker behavior '" + name + "' (valid: " +
                    join_names({"linear", "spiral", "intelligent", "static"}) + ")");
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  EpisodeResult result;
  DefenderStrategy defender{};
  AttackerBehavior attacker{};
  try {
    validate(cfg);
    defender = resolve_defender(cfg.defender);
    attacker = resolve_attacker(cfg.attacker);
    Vec2 xa;
    Vec2 xd;
    int rejections = 0;
    if (cfg.xa) {
      xa = *cfg.xa;
      xd = *cfg.xd;
    } else {
      Rng spawn(spawn_seed(cfg.seed));
      const InitialPositions init = sample_valid_initial_positions(spawn, cfg.world);
      xa = init.xa;
      xd = init.xd;
      rejections = init.rejections;
    }
    result = run_episode(xa, xd, defender, attacker, cfg.world, cfg.seed);
    result.init_rejections = rejections;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidInitializationError& e) {
    err << "error: invalid initialization: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const std::string csv = cfg.writes_csv() ? trajectory_csv(result) : std::string();
    const std::string json =
        cfg.writes_json()
            ? episode_summary_json(result, cfg.world, defender, attacker).dump(2) + "\n"
            : std::string();
    ensure_dir(cfg.output_dir);
    if (cfg.writes_csv()) write_file_atomic(cfg.output_dir / "trajectory.csv", csv);
    if (cfg.writes_json()) write_file_atomic(cfg.output_dir / "summary.json", json);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  out << "outcome=" << name_of(result.outcome) << " t=" << result.end_time << '\n';
  return result.defender_won() ? 0 : 1;
}

int cmd_matrix(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ExperimentReport report;
  try {
    validate(cfg);
    MatrixOptions opts;
    opts.jobs = cfg.jobs;
    if (cfg.xa) opts.fixed_start = std::pair{*cfg.xa, *cfg.xd};
    report = run_experiment_matrix(cfg.world, cfg.trials, cfg.seed, opts);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidInitializationError& e) {
    err << "error: invalid initialization: " << e.what() << '\n';
    return 2;
  }

  const std::string table = report_csv(report);
  try {
    ensure_dir(cfg.output_dir);
    if (cfg.writes_csv()) write_file_atomic(cfg.output_dir / "winrates.csv", table);
    if (cfg.writes_json()) {
      write_file_atomic(cfg.output_dir / "report.json", report_json(report).dump(2) + "\n");
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  out << table;
  return 0;
}

int cmd_check(const RunConfig& cfg, const CheckOptions& opts, std::ostream& out,
              std::ostream& err) {
  std::vector<CheckResult> results;
  try {
    validate(cfg);
    const NoiseParams& noise = cfg.world.noise;
    if (opts.stability_only) {
      StabilityDiagnostic d;
      results.push_back(check_stability(opts.e, opts.ua, noise, opts.samples, cfg.seed, &d));
      out << "lhs=" << format_number(d.lhs) << " e_cos_alpha=" << format_number(d.e_cos_alpha)
          << " n=" << d.n_samples << " rejections=" << d.rejections
          << " condition_holds=" << (d.condition_holds ? "true" : "false") << '\n';
    } else {
      results.push_back(check_one_step_margin_gain(opts.sweep, cfg.seed));
      results.push_back(check_margin_against_grid(opts.grid_configs, cfg.seed));
      results.push_back(check_reliability_properties());
      const double head_on = stability_lhs({3.0, 0.0}, {-1.0, 0.0});
      const double fleeing = stability_lhs({3.0, 0.0}, {1.0, 0.0});
      results.push_back({"stability anchors (head-on = -1, fleeing = 1)",
                         head_on == -1.0 && fleeing == 1.0,
                         "head_on=" + format_number(head_on) + " fleeing=" + format_number(fleeing)});
      results.push_back(check_stability(opts.e, opts.ua, noise, opts.samples, cfg.seed));
      results.push_back(check_fleeing_pursuit({30.0, 0.0}, {20.0, 0.0}, 200));
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  bool all = true;
  for (const auto& r : results) {
    print_check(out, r);
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Safe-zone defense simulator: episodes, experiment matrices and numeric checks",
               "guardian_sim"};
  app.require_subcommand(1);

  std::string config_path, defender, attacker, out_dir, format, failure, evasion;
  int trials = 0, max_steps = 0, jobs = 0;
  std::uint64_t seed = 0;
  double beta = 0, k = 0, tau = 0, r_safe = 0, r_interest = 0;
  std::vector<double> xa, xd, e_flag, ua_flag;
  int samples = 0;
  bool stability = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "flat JSON config file");
    sub->add_option("--defender", defender, "pp | dm | adm");
    sub->add_option("--attacker", attacker, "linear | spiral | intelligent | static");
    sub->add_option("--trials", trials, "trials per strategy pair");
    sub->add_option("--seed", seed, "base seed (falls back to GUARDIAN_SIM_SEED)");
    sub->add_option("--beta", beta, "distance noise coefficient");
    sub->add_option("--k", k, "reliability square half-length");
    sub->add_option("--tau", tau, "capture distance");
    sub->add_option("--r-safe", r_safe, "safe zone radius");
    sub->add_option("--r-interest", r_interest, "zone of interest radius");
    sub->add_option("--max-steps", max_steps, "episode horizon");
    sub->add_option("--failure-criterion", failure, "position_breach | margin_breach");
    sub->add_option("--evasion", evasion, "intelligent attacker evasion weight: inverse-distance | unit");
    sub->add_option("--xa", xa, "attacker start X Y")->expected(2);
    sub->add_option("--xd", xd, "defender start X Y")->expected(2);
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--format", format, "csv | json | both");
    sub->add_option("--jobs", jobs, "worker threads");
  };
  CLI::App* run = app.add_subcommand("run", "run one episode and export its trajectory");
  CLI::App* matrix = app.add_subcommand("matrix", "run the 3x3 strategy/behavior win-rate matrix");
  CLI::App* check = app.add_subcommand("check", "run the numeric validation suites");
  for (CLI::App* sub : {run, matrix, check}) add_common(sub);
  check->add_flag("--stability", stability, "only evaluate the stability diagnostic for --e/--ua");
  check->add_option("--e", e_flag, "error vector X Y")->expected(2);
  check->add_option("--ua", ua_flag, "attacker control X Y")->expected(2);
  check->add_option("--samples", samples, "Monte Carlo samples for E[cos alpha]");

  std::vector<std::string> argv_store{"guardian_sim"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App* sub = run->parsed() ? run : matrix->parsed() ? matrix : check;
  auto given = [&](const char* name) { return sub->count(name) > 0; };

  RunConfig cfg;
  CheckOptions check_opts;
  try {
    // Precedence: flag > config file > environment (seed only) > default.
    bool seed_from_file = false;
    if (given("--config")) {
      const nlohmann::json doc = read_config_file(config_path);
      seed_from_file = doc.is_object() && doc.contains("seed");
      apply_config_json(doc, cfg);
    }
    if (!given("--seed") && !seed_from_file && std::getenv(kSeedEnvVar)) cfg.seed = seed_from_env();
    if (given("--defender")) cfg.defender = defender;
    if (given("--attacker")) cfg.attacker = attacker;
    if (given("--trials")) cfg.trials = trials;
    if (given("--seed")) cfg.seed = seed;
    if (given("--beta")) cfg.world.noise.beta_d = beta;
    if (given("--k")) cfg.world.k = k;
    if (given("--tau")) cfg.world.tau = tau;
    if (given("--r-safe")) cfg.world.zones.r_safe = r_safe;
    if (given("--r-interest")) cfg.world.zones.r_interest = r_interest;
    if (given("--max-steps")) cfg.world.max_steps = max_steps;
    if (given("--failure-criterion")) cfg.world.failure = resolve_failure(failure);
    if (given("--evasion")) cfg.world.evasion = resolve_evasion(evasion);
    if (given("--xa")) cfg.xa = vec_from(xa, "--xa");
    if (given("--xd")) cfg.xd = vec_from(xd, "--xd");
    if (given("--out")) cfg.output_dir = out_dir;
    if (given("--format")) cfg.output_format = parse_format(format);
    if (given("--jobs")) cfg.jobs = jobs;
    if (sub == check) {
      check_opts.stability_only = stability;
      if (check->count("--e")) check_opts.e = vec_from(e_flag, "--e");
      if (check->count("--ua")) check_opts.ua = vec_from(ua_flag, "--ua");
      if (check->count("--samples")) check_opts.samples = samples;
      if (check_opts.samples < 1) throw ConfigError("samples must be at least 1");
    }
  } catch (const ConfigError& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }

  if (sub == run) return cmd_run(cfg, out, err);
  if (sub == matrix) return cmd_matrix(cfg, out, err);
  return cmd_check(cfg, check_opts, out, err);
}

}  // namespace guardian::cli
