// wvg: command-line front end for power indices and false-name manipulation
// analyses of weighted voting games.
//
// Exit status: 0 success, 1 domain error (bad game, split or config), 2 usage.

#include "wvg/experiments.hpp"
#include "wvg/index_exact.hpp"
#include "wvg/index_mc.hpp"
#include "wvg/io.hpp"
#include "wvg/manipulation.hpp"
#include "wvg/serialize.hpp"
#include "wvg/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace wvg;

// Raised for flag combinations CLI11 cannot validate on its own.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct options {
  std::string game_inline;
  std::string game_file;
  std::string kind = "shapley";
  std::string engine = "exact";
  double epsilon = 0.01;
  double delta = 0.01;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> samples;
  std::string format = "text";
  unsigned threads = 0;
  std::size_t player = 0;
  std::size_t parts_k = 2;
  std::string coalition;
  std::size_t annexer = 0;
  std::string parts;
  std::string instance;
  std::string variant = "bi_split";
  bool evaluate = false;
  std::optional<double> margin;
  // experiment
  double mean = 50;
  std::string sigmas = "5,15,25";
  std::size_t min_players = 5;
  std::size_t max_players = 12;
  std::size_t games = 100;
  bool unanimity = false;
  // verify
  std::string suite = "all";
  std::size_t trials = 200;
};

const std::map<std::string, index_kind> kind_names{{"shapley", index_kind::shapley_shubik},
                                                   {"shapley_shubik", index_kind::shapley_shubik},
                                                   {"banzhaf", index_kind::banzhaf}};
const std::map<std::string, engine_kind> engine_names{
    {"exact", engine_kind::exact}, {"mc", engine_kind::monte_carlo}, {"monte_carlo", engine_kind::monte_carlo}};
const std::map<std::string, gadget_variant> variant_names{{"bi_split", gadget_variant::bi_split},
                                                          {"ss_split", gadget_variant::ss_split},
                                                          {"merge", gadget_variant::merge},
                                                          {"annex", gadget_variant::annex}};
const std::map<std::string, verify_suite> suite_names{{"fixtures", verify_suite::fixtures},
                                                      {"bounds", verify_suite::bounds},
                                                      {"oracle", verify_suite::oracle},
                                                      {"all", verify_suite::all}};

template <class Map>
std::vector<std::string> keys(const Map& m) {
  std::vector<std::string> k;
  for (const auto& [name, v] : m) k.push_back(name);
  return k;
}

void add_game(CLI::App* sub, options& o) {
  auto* g = sub->add_option("-g,--game", o.game_inline, "inline game \"q;w1,w2,...\"");
  auto* f = sub->add_option("--game-file", o.game_file, "game file (text or JSON)")->check(CLI::ExistingFile);
  g->excludes(f);
  f->excludes(g);
}

void add_kind(CLI::App* sub, options& o) {
  sub->add_option("-k,--kind", o.kind, "power index")->check(CLI::IsMember(keys(kind_names)))->capture_default_str();
}

void add_sampling(CLI::App* sub, options& o) {
  sub->add_option("--engine", o.engine, "exact or mc")->check(CLI::IsMember(keys(engine_names)))->capture_default_str();
  sub->add_option("--epsilon", o.epsilon, "accuracy")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  sub->add_option("--delta", o.delta, "failure probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
  sub->add_option("--samples", o.samples, "override the Hoeffding sample count")->check(CLI::PositiveNumber);
}

void add_common(CLI::App* sub, options& o) {
  sub->add_option("-f,--format", o.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--threads", o.threads, "worker threads (default $WVG_THREADS or all cores)");
}

Game load_game(const options& o) {
  if (!o.game_inline.empty()) return parse_game_inline(o.game_inline);
  if (!o.game_file.empty()) return load_game_file(o.game_file);
  throw usage_error("one of --game or --game-file is required");
}

std::vector<std::size_t> parse_ids(const std::string& s, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = std::string(detail::trim(tok));
    const auto v = detail::parse_integer(tok, what);
    if (v < 0) throw precondition_error(std::string(what) + " must be non-negative");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw precondition_error(std::string("empty ") + what + " list");
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw invalid_config("malformed number '" + tok + "'");
    }
  }
  return out;
}

McConfig mc_config(const options& o) {
  McConfig c{o.epsilon, o.delta, o.seed, o.samples, o.threads};
  c.validate();
  return c;
}

void no_csv(const options& o, const char* cmd) {
  if (o.format == "csv") throw usage_error(std::string("csv output is not available for ") + cmd);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_index(const options& o) {
  const Game g = load_game(o);
  const index_kind kind = kind_names.at(o.kind);
  IndexVector v;
  json extra;
  if (engine_names.at(o.engine) == engine_kind::exact) {
    v = index(g, kind);
  } else {
    const McConfig c = mc_config(o);
    extra = {{"epsilon", o.epsilon}, {"delta", o.delta}, {"seed", o.seed}, {"samples", samples_for(c)}};
    if (kind == index_kind::shapley_shubik) {
      v.kind = kind;
      for (player_id i = 0; i < g.size(); ++i) v.values.push_back(shapley_mc(g, i, c).value());
    } else {
      v = banzhaf_mc(g, c).normalized;
    }
  }
  if (o.format == "json") {
    json j = to_json(v);
    j["game"] = to_game_json(g);
    j["engine"] = to_string(engine_names.at(o.engine));
    if (!extra.is_null()) j["sampling"] = extra;
    print_json(j);
  } else if (o.format == "csv") {
    std::cout << "player,numerator,denominator,decimal\n";
    for (player_id i = 0; i < v.size(); ++i)
      std::cout << i << "," << numerator(v[i]) << "," << denominator(v[i]) << "," << to_decimal(v[i]) << "\n";
  } else {
    std::cout << to_string(v.kind) << " index of [" << to_game_inline(g) << "]\n";
    for (player_id i = 0; i < v.size(); ++i) std::cout << "  player " << i << ": " << to_display(v[i]) << "\n";
  }
  return 0;
}

void print_report_text(const SplitReport& r) {
  std::cout << "  split (" << join_weights(r.spec.parts) << "): " << to_display(r.payoff_before) << " -> "
            << to_display(r.payoff_after_total) << "  " << to_string(r.result);
  if (r.gain_ratio) std::cout << "  ratio " << to_fraction(*r.gain_ratio);
  std::cout << "\n";
}

int run_scan(const options& o) {
  const Game g = load_game(o);
  const index_kind kind = kind_names.at(o.kind);
  ScanSummary s;
  if (engine_names.at(o.engine) == engine_kind::exact) {
    s = o.parts_k == 2 ? scan_two_way_splits(g, o.player, kind, o.threads) : scan_k_way_splits(g, o.player, o.parts_k, kind, o.threads);
  } else {
    if (o.parts_k != 2) throw usage_error("the sampling engine only scans two-way splits");
    s = scan_two_way_splits_mc(g, o.player, kind, mc_config(o), rational(o.margin.value_or(2 * o.epsilon)));
  }
  if (o.format == "json") {
    json j = to_json(s);
    j["game"] = to_game_json(g);
    print_json(j);
  } else if (o.format == "csv") {
    std::cout << to_csv(s);
  } else {
    std::cout << to_string(kind) << " splits of player " << s.player << " in [" << to_game_inline(g) << "]\n";
    for (const auto& r : s.reports) print_report_text(r);
    std::cout << "total " << s.total_splits << ", beneficial " << s.beneficial << ", harmful " << s.harmful << ", neutral "
              << s.neutral << "\n";
    if (s.best) {
      std::cout << "best:";
      print_report_text(*s.best);
    }
  }
  return 0;
}

int run_find_split(const options& o) {
  no_csv(o, "find-split");
  const Game g = load_game(o);
  const auto r = find_split_approx(g, o.player, o.epsilon, o.delta, kind_names.at(o.kind), o.seed, o.margin, o.threads);
  if (o.format == "json") {
    print_json(to_json(r));
  } else if (r.found) {
    std::cout << "yes: split (" << join_weights(r.spec->parts) << "), estimate " << to_decimal(*r.estimate) << " > baseline "
              << to_decimal(r.baseline) << " + margin " << to_decimal(r.margin) << "\n";
  } else {
    std::cout << "no: none of " << r.candidates_examined << " splits beats baseline " << to_decimal(r.baseline)
              << " by more than " << to_decimal(r.margin) << "\n";
  }
  return 0;
}

int run_merge(const options& o) {
  no_csv(o, "merge");
  const Game g = load_game(o);
  const auto ids = parse_ids(o.coalition, "coalition");
  const auto r = merge_benefit(g, Coalition(ids), kind_names.at(o.kind));
  if (o.format == "json") {
    print_json(to_json(r));
  } else {
    std::cout << "merge {" << join_weights(ids) << "}: " << to_display(r.payoff_before) << " -> " << to_display(r.payoff_after)
              << "  " << (r.beneficial ? "beneficial" : "not beneficial") << "\n";
  }
  return 0;
}

int run_annex(const options& o) {
  no_csv(o, "annex");
  const Game g = load_game(o);
  const auto ids = parse_ids(o.coalition, "coalition");
  const auto r = annex_benefit(g, o.annexer, Coalition(ids), kind_names.at(o.kind));
  if (o.format == "json") {
    print_json(to_json(r));
  } else {
    std::cout << "player " << o.annexer << " annexes {" << join_weights(ids) << "}: " << to_display(r.payoff_before) << " -> "
              << to_display(r.payoff_after) << "  " << (r.beneficial ? "beneficial" : "not beneficial") << "\n";
  }
  return 0;
}

int run_probe(const options& o) {
  no_csv(o, "probe-monotonicity");
  const Game g = load_game(o);
  const auto w = annex_monotonicity_probe(g, o.annexer, kind_names.at(o.kind));
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& x : w) arr.push_back(to_json(x));
    print_json({{"annexer", o.annexer}, {"kind", to_string(kind_names.at(o.kind))}, {"witnesses", arr}});
  } else {
    std::cout << w.size() << " witness" << (w.size() == 1 ? "" : "es") << "\n";
    for (const auto& x : w)
      std::cout << "  (" << x.annexer << ", " << x.heavier << ", " << x.lighter << "): " << to_display(x.after_heavier) << " < "
                << to_display(x.after_lighter) << "\n";
  }
  return 0;
}

int run_bounds(const options& o) {
  no_csv(o, "bounds");
  const Game g = load_game(o);
  std::vector<weight_t> parts;
  for (auto p : parse_ids(o.parts, "parts")) parts.push_back(p);
  const auto r = check_split_bounds(g, {o.player, parts});
  if (o.format == "json") {
    print_json(to_json(r));
  } else {
    const auto n = r.players;
    std::cout << "Shapley-Shubik: " << to_display(r.shapley_before) << " -> " << to_display(r.shapley_after);
    if (r.shapley_ratio) std::cout << ", ratio " << to_fraction(*r.shapley_ratio) << " in [" << to_fraction(rational(2, n + 1)) << ", " << to_fraction(rational(2 * n, n + 1)) << "]";
    std::cout << "\nBanzhaf: " << to_display(r.banzhaf_before) << " -> " << to_display(r.banzhaf_after);
    if (r.banzhaf_ratio) std::cout << ", ratio " << to_fraction(*r.banzhaf_ratio) << " in [" << to_fraction(rational(1, n)) << ", 2]";
    std::cout << "\ncritical counts: " << r.eta_before << " -> " << r.eta_after_sum << " (twice the original)\n"
              << "all bounds hold\n";
  }
  return 0;
}

int run_gadget(const options& o) {
  no_csv(o, "gadget");
  std::vector<weight_t> instance;
  for (auto a : parse_ids(o.instance, "instance")) instance.push_back(a);
  const auto gd = reduction_gadget(instance, variant_names.at(o.variant));
  json j = to_json(gd);
  std::optional<bool> beneficial;
  if (o.evaluate) {
    switch (gd.variant) {
      case gadget_variant::bi_split:
        beneficial = scan_two_way_splits(gd.game, gd.designated[0], index_kind::banzhaf, o.threads).beneficial > 0;
        break;
      case gadget_variant::ss_split:
        beneficial = scan_two_way_splits(gd.game, gd.designated[0], index_kind::shapley_shubik, o.threads).beneficial > 0;
        break;
      case gadget_variant::merge:
        beneficial = merge_benefit(gd.game, Coalition(gd.designated), index_kind::shapley_shubik).beneficial;
        break;
      case gadget_variant::annex:
        beneficial = annex_benefit(gd.game, gd.designated[0], {gd.designated[1]}, index_kind::banzhaf).beneficial;
        break;
    }
    j["beneficial"] = *beneficial;
  }
  if (o.format == "json") {
    print_json(j);
  } else {
    std::cout << to_string(gd.variant) << ": [" << to_game_inline(gd.game) << "], designated " << join_weights(gd.designated) << "\n";
    if (beneficial) std::cout << "beneficial manipulation: " << (*beneficial ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_experiment_cmd(const options& o) {
  ExperimentConfig c;
  c.weight_mean = o.mean;
  c.weight_sigmas = parse_doubles(o.sigmas);
  c.min_players = o.min_players;
  c.max_players = o.max_players;
  c.games_per_cell = o.games;
  c.epsilon = o.epsilon;
  c.delta = o.delta;
  c.beneficial_margin = o.margin;
  c.seed = o.seed;
  c.engine = engine_names.at(o.engine);
  c.kind = kind_names.at(o.kind);
  c.force_unanimity = o.unanimity;
  c.threads = o.threads;
  const auto st = run_experiment(c);
  if (o.format == "json") {
    print_json(stats_to_json(st));
  } else if (o.format == "csv") {
    std::cout << stats_to_csv(st);
  } else {
    std::cout << st.games << " games, " << to_string(st.kind) << ", " << to_string(st.engine) << " engine\n"
              << "games with a beneficial split: " << to_display(st.fraction_games_with_beneficial()) << "\n"
              << "players with a beneficial split: " << to_display(st.fraction_players_with_beneficial()) << "\n"
              << "beneficial splits overall: " << to_display(st.pooled_beneficial_fraction()) << "\n";
    std::cout << stats_to_csv(st);
  }
  return 0;
}

int run_verify(const options& o) {
  no_csv(o, "verify");
  const auto rep = verify(suite_names.at(o.suite), o.trials, o.seed);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rep.results) arr.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    print_json({{"passed", rep.passed()}, {"failures", rep.failures()}, {"results", arr}});
  } else {
    for (const auto& r : rep.results)
      std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.suite << "  " << r.name << "  (" << r.detail << ")\n";
    std::cout << rep.results.size() - rep.failures() << "/" << rep.results.size() << " passed\n";
  }
  for (const auto& r : rep.results)
    if (!r.passed) std::cerr << "wvg: verify: " << r.name << " failed: " << r.detail << "\n";
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  options o;
  CLI::App app{"Power indices and false-name manipulation in weighted voting games"};
  app.require_subcommand(1);

  auto* index_cmd = app.add_subcommand("index", "Shapley-Shubik or Banzhaf index of every player");
  add_game(index_cmd, o);
  add_kind(index_cmd, o);
  add_sampling(index_cmd, o);
  add_common(index_cmd, o);

  auto* scan_cmd = app.add_subcommand("scan", "classify every integer split of one player");
  add_game(scan_cmd, o);
  add_kind(scan_cmd, o);
  add_sampling(scan_cmd, o);
  add_common(scan_cmd, o);
  scan_cmd->add_option("-p,--player", o.player, "splitting player")->required();
  scan_cmd->add_option("--parts", o.parts_k, "number of identities (2..6)")->capture_default_str();
  scan_cmd->add_option("--margin", o.margin, "sampling margin (default 2 epsilon)");

  auto* find_cmd = app.add_subcommand("find-split", "sampling search for a beneficial two-way split");
  add_game(find_cmd, o);
  add_kind(find_cmd, o);
  add_sampling(find_cmd, o);
  add_common(find_cmd, o);
  find_cmd->add_option("-p,--player", o.player, "splitting player")->required();
  find_cmd->add_option("--margin", o.margin, "acceptance margin (default 3 epsilon)");

  auto* merge_cmd = app.add_subcommand("merge", "does merging a coalition pay off");
  add_game(merge_cmd, o);
  add_kind(merge_cmd, o);
  add_common(merge_cmd, o);
  merge_cmd->add_option("-c,--coalition", o.coalition, "players, e.g. 0,1")->required();

  auto* annex_cmd = app.add_subcommand("annex", "does annexing a coalition pay off");
  add_game(annex_cmd, o);
  add_kind(annex_cmd, o);
  add_common(annex_cmd, o);
  annex_cmd->add_option("-a,--annexer", o.annexer, "annexing player")->required();
  annex_cmd->add_option("-c,--coalition", o.coalition, "annexed players, e.g. 2,3")->required();

  auto* probe_cmd = app.add_subcommand("probe-monotonicity", "annexations where a heavier target pays less");
  add_game(probe_cmd, o);
  add_kind(probe_cmd, o);
  add_common(probe_cmd, o);
  probe_cmd->add_option("-a,--annexer", o.annexer, "annexing player")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "measure a two-way split against the gain and loss bounds");
  add_game(bounds_cmd, o);
  add_common(bounds_cmd, o);
  bounds_cmd->add_option("-p,--player", o.player, "splitting player")->required();
  bounds_cmd->add_option("--split", o.parts, "two parts, e.g. 1,1")->required();

  auto* gadget_cmd = app.add_subcommand("gadget", "game built from a PARTITION instance");
  add_common(gadget_cmd, o);
  gadget_cmd->add_option("-i,--instance", o.instance, "positive integers, e.g. 1,1")->required();
  gadget_cmd->add_option("--variant", o.variant, "bi_split, ss_split, merge or annex")
      ->check(CLI::IsMember(keys(variant_names)))
      ->capture_default_str();
  gadget_cmd->add_flag("--evaluate", o.evaluate, "decide the manipulation with the exact engine");

  auto* exp_cmd = app.add_subcommand("experiment", "random-game split study");
  add_kind(exp_cmd, o);
  add_sampling(exp_cmd, o);
  add_common(exp_cmd, o);
  exp_cmd->add_option("--mean", o.mean, "weight mean")->check(CLI::PositiveNumber)->capture_default_str();
  exp_cmd->add_option("--sigmas", o.sigmas, "weight standard deviations")->capture_default_str();
  exp_cmd->add_option("--min-players", o.min_players)->capture_default_str();
  exp_cmd->add_option("--max-players", o.max_players)->capture_default_str();
  exp_cmd->add_option("--games", o.games, "games per sigma")->capture_default_str();
  exp_cmd->add_option("--margin", o.margin, "sampling margin (default 2 epsilon)");
  exp_cmd->add_flag("--unanimity", o.unanimity, "force quota = total weight");

  auto* verify_cmd = app.add_subcommand("verify", "run the built-in fixtures and invariant suites");
  add_common(verify_cmd, o);
  verify_cmd->add_option("--suite", o.suite)->check(CLI::IsMember(keys(suite_names)))->capture_default_str();
  verify_cmd->add_option("--trials", o.trials, "random trials per invariant")->capture_default_str();
  verify_cmd->add_option("--seed", o.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*index_cmd) return run_index(o);
    if (*scan_cmd) return run_scan(o);
    if (*find_cmd) return run_find_split(o);
    if (*merge_cmd) return run_merge(o);
    if (*annex_cmd) return run_annex(o);
    if (*probe_cmd) return run_probe(o);
    if (*bounds_cmd) return run_bounds(o);
    if (*gadget_cmd) return run_gadget(o);
    if (*exp_cmd) return run_experiment_cmd(o);
    if (*verify_cmd) return run_verify(o);
  } catch (const usage_error& e) {
    std::cerr << "wvg: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "wvg: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
