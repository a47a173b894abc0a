#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "figgie/experiment.hpp"

namespace {

using namespace figgie;

enum Exit : int { kOk = 0, kValidation = 2, kRuntime = 3, kMismatch = 4 };

struct RunArgs {
  std::string config;
  std::string output;
  unsigned threads = 1;
};

struct ReportArgs {
  std::string results;
  bool summaries = false;
  std::vector<std::string> bootstrap;
  std::vector<double> acf;
  bool acf_requested = false;
  std::string acf_asset;
  std::size_t max_lag = 20;
  std::size_t resamples = 10000;
  double alpha = 0.05;
  std::string out_dir = ".";
};

struct ReplayArgs {
  std::string results;
  std::size_t game = 0;
  bool log_expectations = false;
  std::string output;
};

int do_run(const RunArgs& args) {
  const ExperimentConfig config = load_config(args.config);
  const ResultsFile results = run_experiment(config, args.threads);
  const std::string path = args.output.empty() ? config.id + "_results.json" : args.output;
  save_results(results, path);
  std::fprintf(stderr, "%d games written to %s\n", config.games, path.c_str());
  return kOk;
}

AcfAsset parse_acf_asset(const std::string& name) {
  static const std::vector<std::pair<std::string, AcfAsset>> names = {
      {"goal", AcfAsset::kGoal},     {"most_traded", AcfAsset::kMostTraded}, {"spades", AcfAsset::kSpades},
      {"clubs", AcfAsset::kClubs},   {"hearts", AcfAsset::kHearts},          {"diamonds", AcfAsset::kDiamonds}};
  for (const auto& [n, a] : names) {
    if (n == name) return a;
  }
  throw ConfigError("--acf-asset: unknown selector '" + name + "'");
}

int do_report(const ReportArgs& args) {
  const ResultsFile results = load_results(args.results);
  AnalysisDirectives d = results.config.analysis;
  const bool explicit_directives = args.summaries || !args.bootstrap.empty() || args.acf_requested;
  if (explicit_directives) {
    d = AnalysisDirectives{};
    d.summaries = args.summaries;
    d.resamples = args.resamples;
    d.alpha = args.alpha;
    for (const auto& pair : args.bootstrap) {
      const auto comma = pair.find(',');
      if (comma == std::string::npos) throw ConfigError("--bootstrap: expected A,B but got '" + pair + "'");
      d.bootstrap.push_back({pair.substr(0, comma), pair.substr(comma + 1)});
    }
    if (args.acf_requested) {
      AcfDirective acf;
      acf.periods = args.acf;
      acf.trade_by_trade = args.acf.empty();
      acf.max_lag = args.max_lag;
      if (!args.acf_asset.empty()) acf.asset = parse_acf_asset(args.acf_asset);
      d.acf = acf;
    }
  }
  for (const auto& b : d.bootstrap) {
    for (const auto& name : {b.reference, b.competitor}) {
      if (!results.config.agent_index(name)) throw ConfigError("--bootstrap: unknown agent '" + name + "'");
    }
  }
  const Report report = make_report(results, d);
  for (const auto& path : write_report(report, results.config.id, args.out_dir)) {
    std::printf("%s\n", path.string().c_str());
  }
  return kOk;
}

int do_replay(const ReplayArgs& args) {
  const ResultsFile results = load_results(args.results);
  if (args.game >= results.games.size()) {
    throw ConfigError("--game: index " + std::to_string(args.game) + " out of range [0, " +
                      std::to_string(results.games.size()) + ")");
  }
  const ReplayOutcome out = replay(results, args.game, args.log_expectations);

  nlohmann::json j;
  j["game"] = args.game;
  j["seed"] = out.result.seed;
  j["matches"] = out.matches;
  j["mismatches"] = out.mismatches;
  j["trades"] = nlohmann::json::array();
  for (const Trade& t : out.result.trades) {
    j["trades"].push_back({t.time, std::string(suit_name(t.asset)), t.buyer, t.seller, t.price, t.volume});
  }
  if (args.log_expectations) {
    j["expectations"] = nlohmann::json::array();
    for (const auto& e : out.result.expectations) {
      j["expectations"].push_back({e.time, e.agent, std::string(suit_name(e.asset)), e.buy, e.sell});
    }
  }
  if (args.output.empty()) {
    std::cout << dump(j);
  } else {
    std::ofstream f(args.output);
    if (!f) throw std::runtime_error("cannot write " + args.output);
    f << dump(j);
  }
  if (!out.matches) {
    for (const auto& m : out.mismatches) std::fprintf(stderr, "mismatch: %s\n", m.c_str());
    return kMismatch;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Figgie market simulation: run experiments, build reports, replay games"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run every game of an experiment config and write a results file");
  run->add_option("config", run_args.config, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("-o,--output", run_args.output, "Results path (default <id>_results.json)");
  run->add_option("-j,--threads", run_args.threads, "Worker threads, 0 = all cores")->capture_default_str();

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "Write summary, bootstrap and ACF tables from a results file");
  report->add_option("results", report_args.results, "Results file")->required()->check(CLI::ExistingFile);
  report->add_flag("--summaries", report_args.summaries, "Per-agent mean/SD/SE of wealth, cash and payout");
  report->add_option("--bootstrap", report_args.bootstrap, "Agent pair REFERENCE,COMPETITOR (repeatable)");
  auto* acf = report->add_option("--acf", report_args.acf, "Return ACF; optional period lengths")
                  ->expected(0, -1)
                  ->check(CLI::PositiveNumber);
  report->add_option("--acf-asset", report_args.acf_asset,
                     "goal, most_traded, spades, clubs, hearts or diamonds (default most_traded)");
  report->add_option("--max-lag", report_args.max_lag, "Largest ACF lag")->capture_default_str();
  report->add_option("--resamples", report_args.resamples, "Bootstrap resamples")->capture_default_str();
  report->add_option("--alpha", report_args.alpha, "Bootstrap significance level")->capture_default_str();
  report->add_option("--out-dir", report_args.out_dir, "Directory for the .tsv tables")->capture_default_str();

  ReplayArgs replay_args;
  auto* replay_cmd = app.add_subcommand("replay", "Re-simulate one game and compare it with the stored row");
  replay_cmd->add_option("results", replay_args.results, "Results file")->required()->check(CLI::ExistingFile);
  replay_cmd->add_option("--game", replay_args.game, "Game index")->required();
  replay_cmd->add_flag("--log-expectations", replay_args.log_expectations, "Include per-agent valuation series");
  replay_cmd->add_option("-o,--output", replay_args.output, "Write the replay JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*run) return do_run(run_args);
    if (*report) {
      report_args.acf_requested = acf->count() > 0;
      return do_report(report_args);
    }
    return do_replay(replay_args);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kRuntime;
  }
}
