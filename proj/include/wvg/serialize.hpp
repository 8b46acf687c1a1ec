#pragma once

// JSON, CSV and text renderings of analysis results. Rationals keep their
// exact numerator and denominator (as strings) next to a display decimal.

#include "wvg/experiments.hpp"
#include "wvg/index_exact.hpp"
#include "wvg/index_mc.hpp"
#include "wvg/io.hpp"
#include "wvg/manipulation.hpp"
#include "wvg/numeric.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace wvg {

using nlohmann::json;

inline std::string to_game_inline(const Game& g) {
  std::string s = std::to_string(g.quota()) + ";";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g.weight(i));
  return s;
}

inline std::string join_weights(std::span<const weight_t> w, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? sep : "") + std::to_string(w[i]);
  return s;
}

inline json to_json(const rational& r) {
  return {{"numerator", numerator(r).str()}, {"denominator", denominator(r).str()}, {"decimal", to_double(r)}};
}

inline json to_json(const std::optional<rational>& r) { return r ? to_json(*r) : json(nullptr); }

inline json to_json(const IndexVector& v) {
  json values = json::array();
  for (player_id i = 0; i < v.size(); ++i) {
    json e = to_json(v[i]);
    e["player"] = i;
    values.push_back(std::move(e));
  }
  return {{"kind", to_string(v.kind)}, {"values", std::move(values)}};
}

inline json to_json(const SplitSpec& s) { return {{"player", s.player}, {"parts", s.parts}}; }

inline json to_json(const SplitReport& r) {
  return {{"spec", to_json(r.spec)},
          {"payoff_before", to_json(r.payoff_before)},
          {"payoff_after_total", to_json(r.payoff_after_total)},
          {"gain_ratio", to_json(r.gain_ratio)},
          {"classification", to_string(r.result)},
          {"engine", to_string(r.engine)},
          {"margin", to_json(r.margin)}};
}

inline json to_json(const ScanSummary& s) {
  json reports = json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  return {{"player", s.player},
          {"kind", to_string(s.kind)},
          {"total_splits", s.total_splits},
          {"beneficial", s.beneficial},
          {"harmful", s.harmful},
          {"neutral", s.neutral},
          {"best", s.best ? to_json(*s.best) : json(nullptr)},
          {"reports", std::move(reports)}};
}

// CSV rows "player,j,before,after,class"; j is the first part, the split
// parts joined by '+' for k-way scans.
inline std::string to_csv(const ScanSummary& s) {
  std::string out = "player,j,before,after,class\n";
  for (const auto& r : s.reports) {
    const std::string j = r.spec.parts.size() == 2 ? std::to_string(r.spec.parts[0]) : join_weights(r.spec.parts, "+");
    out += std::to_string(s.player) + "," + j + "," + to_fraction(r.payoff_before) + "," + to_fraction(r.payoff_after_total) +
           "," + to_string(r.result) + "\n";
  }
  return out;
}

inline json to_json(const FindSplitResult& r) {
  return {{"found", r.found},
          {"spec", r.spec ? to_json(*r.spec) : json(nullptr)},
          {"baseline", to_json(r.baseline)},
          {"estimate", to_json(r.estimate)},
          {"margin", to_json(r.margin)},
          {"candidates_examined", r.candidates_examined},
          {"samples_per_query", r.samples_per_query}};
}

inline json to_json(const Coalition& c) { return json(std::vector<player_id>(c.members().begin(), c.members().end())); }

inline json to_json(const MergeReport& r) {
  return {{"coalition", to_json(r.coalition)},
          {"kind", to_string(r.kind)},
          {"payoff_before", to_json(r.payoff_before)},
          {"payoff_after", to_json(r.payoff_after)},
          {"beneficial", r.beneficial}};
}

inline json to_json(const AnnexReport& r) {
  return {{"annexer", r.annexer},
          {"annexed", to_json(r.annexed)},
          {"kind", to_string(r.kind)},
          {"payoff_before", to_json(r.payoff_before)},
          {"payoff_after", to_json(r.payoff_after)},
          {"beneficial", r.beneficial}};
}

inline json to_json(const MonotonicityWitness& w) {
  return {{"annexer", w.annexer},
          {"heavier", w.heavier},
          {"lighter", w.lighter},
          {"after_heavier", to_json(w.after_heavier)},
          {"after_lighter", to_json(w.after_lighter)}};
}

inline json to_json(const SplitBoundReport& r) {
  return {{"players", r.players},
          {"shapley_before", to_json(r.shapley_before)},
          {"shapley_after", to_json(r.shapley_after)},
          {"shapley_ratio", to_json(r.shapley_ratio)},
          {"shapley_ratio_bounds", {to_json(rational(2, r.players + 1)), to_json(rational(2 * r.players, r.players + 1))}},
          {"banzhaf_before", to_json(r.banzhaf_before)},
          {"banzhaf_after", to_json(r.banzhaf_after)},
          {"banzhaf_ratio", to_json(r.banzhaf_ratio)},
          {"banzhaf_ratio_bounds", {to_json(rational(1, r.players)), to_json(rational(2))}},
          {"eta_before", r.eta_before.str()},
          {"eta_after_sum", r.eta_after_sum.str()},
          {"holds", true}};
}

inline json to_json(const Gadget& g) {
  return {{"variant", to_string(g.variant)}, {"game", to_game_json(g.game)}, {"designated", g.designated}};
}

inline json to_json(const McEstimate& e) {
  return {{"kind", to_string(e.kind)}, {"hits", e.hits}, {"samples", e.samples}, {"value", to_json(e.value())}};
}

}  // namespace wvg
