#include "figgie/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "figgie/rng.hpp"

namespace figgie {

using nlohmann::json;

namespace {

// Strict reader for one JSON object: every key must be consumed.
class Fields {
 public:
  Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_ + ": expected an object");
  }

  [[nodiscard]] const json* get(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  template <class T>
  T required(const std::string& key) {
    const json* v = get(key);
    if (v == nullptr) throw ConfigError(at(key) + ": missing required field");
    return convert<T>(*v, key);
  }

  template <class T>
  T optional(const std::string& key, T fallback) {
    const json* v = get(key);
    return v == nullptr ? fallback : convert<T>(*v, key);
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.contains(key)) throw ConfigError(at(key) + ": unknown field");
    }
  }

  [[nodiscard]] std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

 private:
  template <class T>
  T convert(const json& v, const std::string& key) const {
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw ConfigError(at(key) + ": expected a boolean");
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) throw ConfigError(at(key) + ": expected an integer");
      if constexpr (std::is_unsigned_v<T>) {
        if (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0) {
          throw ConfigError(at(key) + ": expected a nonnegative integer");
        }
      }
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) throw ConfigError(at(key) + ": expected a number");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) throw ConfigError(at(key) + ": expected a string");
    }
    try {
      return v.get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(at(key) + ": " + e.what());
    }
  }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

std::string variant_name(ChartistVariant v) { return v == ChartistVariant::kTelescoped ? "telescoped" : "regression"; }

constexpr std::array<std::pair<AcfAsset, std::string_view>, 6> kAcfAssets = {{
    {AcfAsset::kGoal, "goal"},
    {AcfAsset::kMostTraded, "most_traded"},
    {AcfAsset::kSpades, "spades"},
    {AcfAsset::kClubs, "clubs"},
    {AcfAsset::kHearts, "hearts"},
    {AcfAsset::kDiamonds, "diamonds"},
}};

std::string acf_asset_name(AcfAsset a) {
  for (const auto& [value, name] : kAcfAssets) {
    if (value == a) return std::string(name);
  }
  return "?";
}

Suit parse_suit(const std::string& name, const std::string& where) {
  for (Suit s : kAllSuits) {
    if (suit_name(s) == name) return s;
  }
  throw ConfigError(where + ": unknown suit '" + name + "'");
}

StrategyParams parse_params(const std::string& kind, const json* params, const std::string& path,
                            const std::vector<std::string>& names) {
  static const json kEmpty = json::object();
  Fields f(params == nullptr ? kEmpty : *params, path);
  StrategyParams out;
  if (kind == "noise") {
    NoiseParams p;
    p.sigma = f.optional("sigma", p.sigma);
    p.fallback_price = f.optional("fallback_price", p.fallback_price);
    out = p;
  } else if (kind == "fundamentalist") {
    FundamentalistParams p;
    p.r = f.optional("r", p.r);
    out = p;
  } else if (kind == "bottom_feeder") {
    BottomFeederParams p;
    p.k = f.optional("k", p.k);
    const json* prey = f.get("prey");
    if (prey == nullptr) throw ConfigError(f.at("prey") + ": missing required field");
    if (!prey->is_array()) throw ConfigError(f.at("prey") + ": expected an array of agent names");
    for (const json& name : *prey) {
      if (!name.is_string()) throw ConfigError(f.at("prey") + ": expected agent names");
      auto it = std::find(names.begin(), names.end(), name.get<std::string>());
      if (it == names.end()) throw ConfigError(f.at("prey") + ": unknown agent '" + name.get<std::string>() + "'");
      p.prey.insert(static_cast<AgentId>(it - names.begin()));
    }
    out = p;
  } else if (kind == "chartist") {
    ChartistParams p;
    const auto variant = f.optional<std::string>("variant", variant_name(p.variant));
    if (variant == "telescoped") {
      p.variant = ChartistVariant::kTelescoped;
    } else if (variant == "regression") {
      p.variant = ChartistVariant::kRegression;
    } else {
      throw ConfigError(f.at("variant") + ": expected 'telescoped' or 'regression'");
    }
    p.horizon = f.optional("horizon", p.horizon);
    p.divergence_cap = f.optional("divergence_cap", p.divergence_cap);
    out = p;
  } else {
    throw ConfigError(path + ": unknown strategy '" + kind + "'");
  }
  f.finish();
  return out;
}

json params_to_json(const StrategyParams& params, const std::vector<std::string>& names) {
  struct Visitor {
    const std::vector<std::string>& names;
    json operator()(const NoiseParams& p) const { return {{"sigma", p.sigma}, {"fallback_price", p.fallback_price}}; }
    json operator()(const FundamentalistParams& p) const { return {{"r", p.r}}; }
    json operator()(const BottomFeederParams& p) const {
      json prey = json::array();
      for (AgentId a : p.prey) prey.push_back(names.at(a));
      return {{"prey", prey}, {"k", p.k}};
    }
    json operator()(const ChartistParams& p) const {
      return {{"variant", variant_name(p.variant)}, {"horizon", p.horizon}, {"divergence_cap", p.divergence_cap}};
    }
  };
  return std::visit(Visitor{names}, params);
}

AnalysisDirectives parse_analysis(const json* j, const ExperimentConfig& config) {
  AnalysisDirectives a;
  if (j == nullptr) return a;
  Fields f(*j, "analysis");
  a.summaries = f.optional("summaries", a.summaries);
  a.resamples = f.optional("resamples", a.resamples);
  a.alpha = f.optional("alpha", a.alpha);
  if (a.resamples < 1000) throw ConfigError("analysis.resamples: must be >= 1000");
  if (!(a.alpha > 0.0 && a.alpha < 1.0)) throw ConfigError("analysis.alpha: must lie in (0, 1)");

  if (const json* boot = f.get("bootstrap")) {
    if (!boot->is_array()) throw ConfigError("analysis.bootstrap: expected an array");
    for (std::size_t i = 0; i < boot->size(); ++i) {
      Fields b((*boot)[i], "analysis.bootstrap[" + std::to_string(i) + "]");
      BootstrapDirective d{b.required<std::string>("reference"), b.required<std::string>("competitor")};
      b.finish();
      for (const auto& name : {d.reference, d.competitor}) {
        if (!config.agent_index(name)) {
          throw ConfigError("analysis.bootstrap[" + std::to_string(i) + "]: unknown agent '" + name + "'");
        }
      }
      a.bootstrap.push_back(d);
    }
  }
  if (const json* acf = f.get("acf")) {
    Fields c(*acf, "analysis.acf");
    AcfDirective d;
    d.trade_by_trade = c.optional("trade_by_trade", d.trade_by_trade);
    d.max_lag = c.optional("max_lag", d.max_lag);
    if (d.max_lag < 1) throw ConfigError("analysis.acf.max_lag: must be >= 1");
    const auto asset = c.optional<std::string>("asset", acf_asset_name(d.asset));
    auto it = std::find_if(kAcfAssets.begin(), kAcfAssets.end(), [&](const auto& p) { return p.second == asset; });
    if (it == kAcfAssets.end()) throw ConfigError("analysis.acf.asset: unknown selector '" + asset + "'");
    d.asset = it->first;
    if (const json* periods = c.get("periods")) {
      if (!periods->is_array()) throw ConfigError("analysis.acf.periods: expected an array");
      for (const json& p : *periods) {
        if (!p.is_number() || !(p.get<double>() > 0.0)) {
          throw ConfigError("analysis.acf.periods: expected positive numbers");
        }
        d.periods.push_back(p.get<double>());
      }
    }
    c.finish();
    a.acf = d;
  }
  f.finish();
  return a;
}

json analysis_to_json(const AnalysisDirectives& a) {
  json j = {{"summaries", a.summaries}, {"resamples", a.resamples}, {"alpha", a.alpha}};
  j["bootstrap"] = json::array();
  for (const auto& b : a.bootstrap) j["bootstrap"].push_back({{"reference", b.reference}, {"competitor", b.competitor}});
  if (a.acf) {
    j["acf"] = {{"trade_by_trade", a.acf->trade_by_trade},
                {"periods", a.acf->periods},
                {"max_lag", a.acf->max_lag},
                {"asset", acf_asset_name(a.acf->asset)}};
  }
  return j;
}

}  // namespace

std::optional<AgentId> ExperimentConfig::agent_index(const std::string& name) const {
  for (std::size_t i = 0; i < setup.agents.size(); ++i) {
    if (setup.agents[i].name == name) return static_cast<AgentId>(i);
  }
  return std::nullopt;
}

ExperimentConfig parse_config(const json& j) {
  Fields f(j, "");
  const json* version = f.get("schema_version");
  if (version == nullptr) throw ConfigError("schema_version: missing required field");
  if (!version->is_number_integer() || version->get<int>() != kConfigSchemaVersion) {
    throw ConfigError("schema_version: unsupported (expected " + std::to_string(kConfigSchemaVersion) + ")");
  }

  ExperimentConfig c;
  c.id = f.required<std::string>("id");
  if (c.id.empty()) throw ConfigError("id: must be nonempty");
  c.games = f.required<int>("games");
  if (c.games < 1) throw ConfigError("games: must be >= 1");
  c.master_seed = f.required<std::uint64_t>("master_seed");
  c.setup.events_per_game = f.optional("events_per_game", c.setup.events_per_game);
  c.setup.order_volume = f.optional("order_volume", c.setup.order_volume);
  c.record_trades = f.optional("record_trades", c.record_trades);

  const json* agents = f.get("agents");
  if (agents == nullptr) throw ConfigError("agents: missing required field");
  if (!agents->is_array()) throw ConfigError("agents: expected an array");
  if (agents->size() != kNumPlayers) {
    throw ConfigError("agents: expected exactly 4 agents, got " + std::to_string(agents->size()));
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < agents->size(); ++i) {
    const std::string path = "agents[" + std::to_string(i) + "]";
    const json& a = (*agents)[i];
    if (!a.is_object() || !a.contains("name") || !a["name"].is_string()) {
      throw ConfigError(path + ".name: missing required field");
    }
    const auto name = a["name"].get<std::string>();
    if (name.empty()) throw ConfigError(path + ".name: must be nonempty");
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw ConfigError(path + ".name: duplicate agent name '" + name + "'");
    }
    names.push_back(name);
  }
  for (std::size_t i = 0; i < agents->size(); ++i) {
    const std::string path = "agents[" + std::to_string(i) + "]";
    Fields a((*agents)[i], path);
    AgentSpec spec;
    spec.name = a.required<std::string>("name");
    const auto kind = a.required<std::string>("strategy");
    spec.strategy = parse_params(kind, a.get("params"), path + ".params", names);
    spec.timing.consideration_rate = a.optional("consideration_rate", spec.timing.consideration_rate);
    spec.timing.latency = a.optional("latency", spec.timing.latency);
    a.finish();
    c.setup.agents.push_back(std::move(spec));
  }
  try {
    c.setup.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  c.analysis = parse_analysis(f.get("analysis"), c);
  f.finish();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

json to_json(const ExperimentConfig& c) {
  std::vector<std::string> names;
  for (const auto& a : c.setup.agents) names.push_back(a.name);
  json agents = json::array();
  for (const auto& a : c.setup.agents) {
    agents.push_back({{"name", a.name},
                      {"strategy", std::string(strategy_kind(a.strategy))},
                      {"params", params_to_json(a.strategy, names)},
                      {"consideration_rate", a.timing.consideration_rate},
                      {"latency", a.timing.latency}});
  }
  return {{"schema_version", kConfigSchemaVersion},
          {"id", c.id},
          {"games", c.games},
          {"master_seed", c.master_seed},
          {"events_per_game", c.setup.events_per_game},
          {"order_volume", c.setup.order_volume},
          {"record_trades", c.record_trades},
          {"agents", agents},
          {"analysis", analysis_to_json(c.analysis)}};
}

ResultsFile run_experiment(const ExperimentConfig& config, unsigned threads) {
  config.setup.validate();
  ResultsFile out;
  out.config = config;
  out.games.resize(static_cast<std::size_t>(config.games));
  GameOptions options;
  options.record_trades = config.record_trades;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < out.games.size(); i = next++) {
      out.games[i] = GameRecord{i, run_game(config.setup, game_seed(config.master_seed, i), options)};
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(out.games.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

namespace {

json trade_row(const Trade& t) {
  return json::array({t.time, std::string(suit_name(t.asset)), t.buyer, t.seller, t.price, t.volume});
}

Trade parse_trade_row(const json& row, const std::string& where) {
  if (!row.is_array() || row.size() != 6) throw ConfigError(where + ": expected a 6-column trade row");
  Trade t;
  t.time = row[0].get<double>();
  t.asset = parse_suit(row[1].get<std::string>(), where);
  t.buyer = row[2].get<AgentId>();
  t.seller = row[3].get<AgentId>();
  t.price = row[4].get<double>();
  t.volume = row[5].get<int>();
  if (t.buyer >= kNumPlayers || t.seller >= kNumPlayers) throw ConfigError(where + ": agent index out of range");
  return t;
}

json game_row(const GameRecord& g, const ExperimentConfig& config) {
  const GameResult& r = g.result;
  json agents = json::array();
  for (std::size_t i = 0; i < kNumPlayers; ++i) {
    const AgentOutcome& a = r.agents[i];
    agents.push_back({{"name", config.setup.agents[i].name},
                      {"cash", a.cash},
                      {"payout", a.payout},
                      {"wealth", a.wealth},
                      {"holdings", a.holdings},
                      {"orders_sent", a.orders_sent},
                      {"clamp_hits", a.clamp_hits},
                      {"invalid_price_hits", a.invalid_price_hits},
                      {"diverged", a.diverged()}});
  }
  json row = {{"index", g.index},
              {"seed", r.seed},
              {"deck", r.deck},
              {"goal_suit", std::string(suit_name(r.goal_suit))},
              {"trade_count", r.trade_count},
              {"events", r.events},
              {"voided_orders", r.voided_orders},
              {"end_time", r.end_time},
              {"agents", agents}};
  if (!r.trades.empty() || config.record_trades) {
    json trades = json::array();
    for (const Trade& t : r.trades) trades.push_back(trade_row(t));
    row["trades"] = trades;
  }
  return row;
}

GameRecord parse_game_row(const json& j, const std::string& path) {
  Fields f(j, path);
  GameRecord g;
  GameResult& r = g.result;
  g.index = f.required<std::size_t>("index");
  r.seed = f.required<std::uint64_t>("seed");
  r.deck = f.required<int>("deck");
  (void)deck(r.deck);  // range check
  r.goal_suit = parse_suit(f.required<std::string>("goal_suit"), f.at("goal_suit"));
  r.trade_count = f.required<std::size_t>("trade_count");
  r.events = f.required<std::size_t>("events");
  r.voided_orders = f.required<std::size_t>("voided_orders");
  r.end_time = f.required<double>("end_time");
  const json* agents = f.get("agents");
  if (agents == nullptr || !agents->is_array() || agents->size() != kNumPlayers) {
    throw ConfigError(f.at("agents") + ": expected 4 agent rows");
  }
  for (std::size_t i = 0; i < kNumPlayers; ++i) {
    Fields a((*agents)[i], f.at("agents") + "[" + std::to_string(i) + "]");
    AgentOutcome& o = r.agents[i];
    (void)a.required<std::string>("name");
    o.cash = a.required<double>("cash");
    o.payout = a.required<double>("payout");
    o.wealth = a.required<double>("wealth");
    o.holdings = a.required<Hand>("holdings");
    o.orders_sent = a.required<std::uint32_t>("orders_sent");
    o.clamp_hits = a.required<std::uint32_t>("clamp_hits");
    o.invalid_price_hits = a.required<std::uint32_t>("invalid_price_hits");
    (void)a.required<bool>("diverged");
    a.finish();
  }
  if (const json* trades = f.get("trades")) {
    if (!trades->is_array()) throw ConfigError(f.at("trades") + ": expected an array");
    for (std::size_t i = 0; i < trades->size(); ++i) {
      r.trades.push_back(parse_trade_row((*trades)[i], f.at("trades") + "[" + std::to_string(i) + "]"));
    }
  }
  f.finish();
  return g;
}

}  // namespace

json to_json(const ResultsFile& results) {
  json games = json::array();
  for (const GameRecord& g : results.games) games.push_back(game_row(g, results.config));
  return {{"format", "figgie-results"},
          {"schema_version", kResultsSchemaVersion},
          {"config", to_json(results.config)},
          {"games", games}};
}

ResultsFile parse_results(const json& j) {
  Fields f(j, "");
  if (f.required<std::string>("format") != "figgie-results") throw ConfigError("format: not a figgie results file");
  if (f.required<int>("schema_version") != kResultsSchemaVersion) throw ConfigError("schema_version: unsupported");
  ResultsFile r;
  const json* config = f.get("config");
  if (config == nullptr) throw ConfigError("config: missing required field");
  r.config = parse_config(*config);
  const json* games = f.get("games");
  if (games == nullptr || !games->is_array()) throw ConfigError("games: expected an array");
  for (std::size_t i = 0; i < games->size(); ++i) {
    r.games.push_back(parse_game_row((*games)[i], "games[" + std::to_string(i) + "]"));
    if (r.games.back().index != i) throw ConfigError("games[" + std::to_string(i) + "].index: out of order");
  }
  f.finish();
  return r;
}

std::string dump(const json& j) { return j.dump(1) + "\n"; }

void save_results(const ResultsFile& results, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write results to " + path.string());
  out << dump(to_json(results));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

ResultsFile load_results(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open results " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("results file is not valid JSON: ") + e.what());
  }
  return parse_results(j);
}

std::string_view metric_name(Metric m) noexcept {
  switch (m) {
    case Metric::kWealth: return "wealth";
    case Metric::kCash: return "cash";
    case Metric::kPayout: return "payout";
  }
  return "?";
}

std::vector<double> metric_series(const ResultsFile& results, AgentId agent, Metric metric) {
  std::vector<double> out;
  out.reserve(results.games.size());
  for (const GameRecord& g : results.games) {
    const AgentOutcome& a = g.result.agents.at(agent);
    out.push_back(metric == Metric::kWealth ? a.wealth : metric == Metric::kCash ? a.cash : a.payout);
  }
  return out;
}

std::vector<std::vector<Trade>> game_trades(const ResultsFile& results) {
  std::vector<std::vector<Trade>> out(results.games.size());
  for (std::size_t i = 0; i < results.games.size(); ++i) {
    const GameResult& r = results.games[i].result;
    if (results.config.record_trades) {
      out[i] = r.trades;
    } else {
      GameOptions options;
      options.record_trades = true;
      out[i] = run_game(results.config.setup, r.seed, options).trades;
    }
  }
  return out;
}

namespace {

constexpr std::array<Metric, 3> kMetrics = {Metric::kWealth, Metric::kCash, Metric::kPayout};

double reference_level(Metric m) {
  switch (m) {
    case Metric::kWealth: return kStartingCash + kAnte;
    case Metric::kCash: return kStartingCash;
    case Metric::kPayout: return kAnte;
  }
  return 0.0;
}

std::vector<double> prices_for(const std::vector<Trade>& trades, Suit s) {
  std::vector<double> p;
  for (const Trade& t : trades) {
    if (t.asset == s) p.push_back(t.price);
  }
  return p;
}

Suit series_suit(AcfAsset selector, const GameResult& r, const std::vector<Trade>& trades) {
  switch (selector) {
    case AcfAsset::kGoal: return r.goal_suit;
    case AcfAsset::kSpades: return Suit::kSpades;
    case AcfAsset::kClubs: return Suit::kClubs;
    case AcfAsset::kHearts: return Suit::kHearts;
    case AcfAsset::kDiamonds: return Suit::kDiamonds;
    case AcfAsset::kMostTraded: break;
  }
  std::array<std::size_t, kNumSuits> count{};
  for (const Trade& t : trades) {
    if (t.price > 0.0) ++count[index(t.asset)];
  }
  return suit_at(static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin()));
}

void add_acf(Report& report, std::optional<double> period, std::size_t game, const stats::ReturnSeries& series,
             std::size_t max_lag) {
  if (series.values.size() < 2) return;
  const std::size_t lag = std::min(max_lag, series.values.size() - 1);
  try {
    report.acf.push_back(AcfRow{period, game, stats::acf(series.values, lag)});
  } catch (const std::domain_error&) {
    // Constant return series: autocorrelation undefined, game skipped.
  }
}

}  // namespace

Report make_report(const ResultsFile& results, const AnalysisDirectives& directives) {
  const ExperimentConfig& config = results.config;
  Report report;
  if (directives.summaries && results.games.size() >= 2) {
    for (std::size_t i = 0; i < config.setup.agents.size(); ++i) {
      for (Metric m : kMetrics) {
        const auto values = metric_series(results, static_cast<AgentId>(i), m);
        report.summaries.push_back(SummaryRow{config.setup.agents[i].name,
                                              std::string(strategy_kind(config.setup.agents[i].strategy)), m,
                                              stats::summarize(values), reference_level(m)});
      }
    }
  }

  std::uint64_t boot_seed = mix64(config.master_seed ^ 0xb007U);
  for (const BootstrapDirective& d : directives.bootstrap) {
    const auto ref = config.agent_index(d.reference);
    const auto comp = config.agent_index(d.competitor);
    if (!ref) throw ConfigError("bootstrap: unknown agent '" + d.reference + "'");
    if (!comp) throw ConfigError("bootstrap: unknown agent '" + d.competitor + "'");
    for (Metric m : kMetrics) {
      const auto a = metric_series(results, *comp, m);
      const auto b = metric_series(results, *ref, m);
      BootstrapRow row{d.reference, d.competitor, m, 0.0, {}};
      for (std::size_t i = 0; i < a.size(); ++i) row.mean_difference += (a[i] - b[i]) / static_cast<double>(a.size());
      boot_seed = mix64(boot_seed);
      row.interval = stats::bootstrap_diff_ci(a, b, directives.resamples, directives.alpha, boot_seed);
      report.bootstrap.push_back(row);
    }
  }

  if (directives.acf) {
    const AcfDirective& d = *directives.acf;
    const auto trades = game_trades(results);
    std::vector<std::optional<double>> periods;
    if (d.trade_by_trade) periods.emplace_back(std::nullopt);
    for (double p : d.periods) periods.emplace_back(p);
    for (const auto& period : periods) {
      for (std::size_t g = 0; g < results.games.size(); ++g) {
        const Suit s = series_suit(d.asset, results.games[g].result, trades[g]);
        try {
          if (period) {
            std::vector<Trade> suit_trades;
            for (const Trade& t : trades[g]) {
              if (t.asset == s) suit_trades.push_back(t);
            }
            add_acf(report, period, g, stats::build_returns(suit_trades, *period, results.games[g].result.end_time),
                    d.max_lag);
          } else {
            add_acf(report, period, g, stats::build_returns(prices_for(trades[g], s)), d.max_lag);
          }
        } catch (const std::invalid_argument&) {
          // Too few usable prices in this game.
        }
      }
      for (std::size_t lag = 1; lag <= d.max_lag; ++lag) {
        std::vector<double> values;
        for (const AcfRow& row : report.acf) {
          if (row.period == period && row.rho.size() > lag) values.push_back(row.rho[lag]);
        }
        if (values.empty()) continue;
        report.acf_medians.push_back(AcfMedianRow{period, lag, stats::median(values), stats::quantile(values, 0.25),
                                                  stats::quantile(values, 0.75), values.size()});
      }
    }
  }
  return report;
}

namespace {

std::string period_label(const std::optional<double>& p) {
  if (!p) return "trade";
  std::ostringstream s;
  s << *p;
  return s.str();
}

std::ofstream open_table(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.precision(17);
  return out;
}

}  // namespace

std::vector<std::filesystem::path> write_report(const Report& report, const std::string& id,
                                                const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  if (!report.summaries.empty()) {
    const auto path = dir / (id + "_summary.tsv");
    auto out = open_table(path);
    out << "agent\tstrategy\tmetric\tmean\tsd\tse\tn\treference\n";
    for (const auto& r : report.summaries) {
      out << r.agent << '\t' << r.strategy << '\t' << metric_name(r.metric) << '\t' << r.summary.mean << '\t'
          << r.summary.sd << '\t' << r.summary.se << '\t' << r.summary.n << '\t' << r.reference << '\n';
    }
    written.push_back(path);
  }
  if (!report.bootstrap.empty()) {
    const auto path = dir / (id + "_bootstrap.tsv");
    auto out = open_table(path);
    out << "reference\tcompetitor\tmetric\tmean_difference\tlo\thi\n";
    for (const auto& r : report.bootstrap) {
      out << r.reference << '\t' << r.competitor << '\t' << metric_name(r.metric) << '\t' << r.mean_difference
          << '\t' << r.interval.lo << '\t' << r.interval.hi << '\n';
    }
    written.push_back(path);
  }
  if (!report.acf.empty()) {
    const auto path = dir / (id + "_acf.tsv");
    auto out = open_table(path);
    out << "period\tgame\tlag\trho\n";
    for (const auto& r : report.acf) {
      for (std::size_t lag = 0; lag < r.rho.size(); ++lag) {
        out << period_label(r.period) << '\t' << r.game << '\t' << lag << '\t' << r.rho[lag] << '\n';
      }
    }
    written.push_back(path);
  }
  if (!report.acf_medians.empty()) {
    const auto path = dir / (id + "_acf_median.tsv");
    auto out = open_table(path);
    out << "period\tlag\tmedian\tq25\tq75\tgames\n";
    for (const auto& r : report.acf_medians) {
      out << period_label(r.period) << '\t' << r.lag << '\t' << r.median << '\t' << r.q25 << '\t' << r.q75 << '\t'
          << r.games << '\n';
    }
    written.push_back(path);
  }
  return written;
}

ReplayOutcome replay(const ResultsFile& results, std::size_t index, bool log_expectations) {
  if (index >= results.games.size()) {
    throw std::out_of_range("game index " + std::to_string(index) + " out of range [0, " +
                            std::to_string(results.games.size()) + ")");
  }
  const GameRecord& stored = results.games[index];
  ReplayOutcome out;
  out.seed_consistent = stored.result.seed == game_seed(results.config.master_seed, index);
  if (!out.seed_consistent) out.mismatches.emplace_back("seed: stored seed is not derived from master_seed");

  GameOptions options;
  options.record_trades = true;
  options.log_expectations = log_expectations;
  out.result = run_game(results.config.setup, stored.result.seed, options);

  GameRecord fresh{index, out.result};
  if (!results.config.record_trades) fresh.result.trades.clear();
  fresh.result.expectations.clear();
  const json want = game_row(stored, results.config);
  const json got = game_row(fresh, results.config);
  for (const auto& [key, value] : want.items()) {
    if (!got.contains(key) || got[key] != value) out.mismatches.push_back(key + ": replay differs from stored row");
  }
  out.matches = out.mismatches.empty();
  return out;
}

}  // namespace figgie
