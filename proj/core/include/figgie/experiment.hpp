#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "figgie/analytics.hpp"
#include "figgie/game.hpp"

namespace figgie {

inline constexpr int kConfigSchemaVersion = 1;
inline constexpr int kResultsSchemaVersion = 1;

// Invalid configuration, results file or report directive. The message
// starts with the offending field path.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bootstrap comparison. Differences are reported as competitor - reference.
struct BootstrapDirective {
  std::string reference;
  std::string competitor;
};

// Which suit's trades feed a game's return series.
enum class AcfAsset : std::uint8_t { kGoal, kMostTraded, kSpades, kClubs, kHearts, kDiamonds };

struct AcfDirective {
  bool trade_by_trade = true;
  std::vector<double> periods;  // period lengths in time units
  std::size_t max_lag = 20;
  AcfAsset asset = AcfAsset::kMostTraded;
};

struct AnalysisDirectives {
  bool summaries = true;
  std::vector<BootstrapDirective> bootstrap;
  std::optional<AcfDirective> acf;
  std::size_t resamples = 10000;
  double alpha = 0.05;
};

struct ExperimentConfig {
  std::string id;
  int games = 100;
  std::uint64_t master_seed = 0;
  GameSetup setup;
  AnalysisDirectives analysis;
  bool record_trades = false;

  // Index of the agent called `name`, or nullopt.
  [[nodiscard]] std::optional<AgentId> agent_index(const std::string& name) const;
};

// Parses and validates. Unknown fields and a missing or unsupported
// schema_version are rejected with ConfigError.
[[nodiscard]] ExperimentConfig parse_config(const nlohmann::json& j);
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path& path);
// Canonical form with every default spelled out; parse_config(to_json(c)) == c.
[[nodiscard]] nlohmann::json to_json(const ExperimentConfig& config);

struct GameRecord {
  std::size_t index = 0;
  GameResult result;
};

struct ResultsFile {
  ExperimentConfig config;
  std::vector<GameRecord> games;  // ordered by index
};

// Runs config.games games with seeds game_seed(master_seed, index) on
// `threads` workers (0 = hardware concurrency). Output is independent of the
// worker count.
[[nodiscard]] ResultsFile run_experiment(const ExperimentConfig& config, unsigned threads = 1);

[[nodiscard]] nlohmann::json to_json(const ResultsFile& results);
[[nodiscard]] ResultsFile parse_results(const nlohmann::json& j);
void save_results(const ResultsFile& results, const std::filesystem::path& path);
[[nodiscard]] ResultsFile load_results(const std::filesystem::path& path);
[[nodiscard]] std::string dump(const nlohmann::json& j);

// Per-game values of one metric for one agent.
enum class Metric : std::uint8_t { kWealth, kCash, kPayout };
[[nodiscard]] std::vector<double> metric_series(const ResultsFile& results, AgentId agent, Metric metric);
[[nodiscard]] std::string_view metric_name(Metric m) noexcept;

struct SummaryRow {
  std::string agent;
  std::string strategy;
  Metric metric = Metric::kWealth;
  stats::Summary summary;
  double reference = 0.0;  // starting level: 400 wealth, 350 cash, 50 payout
};

struct BootstrapRow {
  std::string reference;
  std::string competitor;
  Metric metric = Metric::kWealth;
  double mean_difference = 0.0;
  stats::Interval interval;
};

struct AcfRow {
  std::optional<double> period;  // absent = trade by trade
  std::size_t game = 0;
  std::vector<double> rho;       // lags 0..k
};

struct AcfMedianRow {
  std::optional<double> period;
  std::size_t lag = 0;
  double median = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
  std::size_t games = 0;
};

struct Report {
  std::vector<SummaryRow> summaries;
  std::vector<BootstrapRow> bootstrap;
  std::vector<AcfRow> acf;
  std::vector<AcfMedianRow> acf_medians;
};

// Trades of every game, taken from the file when recorded, else re-simulated.
[[nodiscard]] std::vector<std::vector<Trade>> game_trades(const ResultsFile& results);

// Throws ConfigError for directives naming unknown agents.
[[nodiscard]] Report make_report(const ResultsFile& results, const AnalysisDirectives& directives);

// Writes <id>_summary.tsv, <id>_bootstrap.tsv, <id>_acf.tsv and
// <id>_acf_median.tsv (only those with rows). Returns the paths written.
std::vector<std::filesystem::path> write_report(const Report& report, const std::string& id,
                                                const std::filesystem::path& dir);

struct ReplayOutcome {
  GameResult result;           // with trades and (optionally) expectations
  bool matches = false;        // replayed row equals the stored row
  bool seed_consistent = false;  // stored seed equals game_seed(master_seed, index)
  std::vector<std::string> mismatches;
};

// Re-simulates game `index` from its stored seed and compares with the
// stored row. Throws std::out_of_range for a bad index.
[[nodiscard]] ReplayOutcome replay(const ResultsFile& results, std::size_t index, bool log_expectations = false);

}  // namespace figgie
