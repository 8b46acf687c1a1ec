#pragma once

#include "wvg/game.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

namespace wvg {

namespace detail {

inline std::int64_t parse_integer(std::string_view tok, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
    throw invalid_game(std::string("malformed ") + what + ": '" + std::string(tok) + "'");
  return v;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Signed values are accepted by the tokenizer so that a negative weight is
// reported as a violated invariant rather than a syntax error.
inline Game make_game(std::int64_t quota, const std::vector<std::int64_t>& raw,
                      std::optional<std::string> label = std::nullopt) {
  if (quota < 1) throw invalid_game("quota \xE2\x89\xA5 1 violated");
  std::vector<weight_t> w;
  w.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 1) throw invalid_game("weight \xE2\x89\xA5 1 violated (player " + std::to_string(i) + ")");
    w.push_back(static_cast<weight_t>(raw[i]));
  }
  return Game(static_cast<weight_t>(quota), std::move(w), std::move(label));
}

}  // namespace detail

// Two-line text format: quota, then whitespace-separated weights.
inline Game parse_game_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string quota_line, weight_line;
  if (!std::getline(in, quota_line)) throw invalid_game("malformed game text: missing quota line");
  if (!std::getline(in, weight_line)) throw invalid_game("malformed game text: missing weights line");
  std::string rest;
  while (std::getline(in, rest))
    if (!detail::trim(rest).empty()) throw invalid_game("malformed game text: trailing content after weights");

  const auto quota = detail::parse_integer(detail::trim(quota_line), "quota");
  std::vector<std::int64_t> raw;
  std::istringstream ws(weight_line);
  for (std::string tok; ws >> tok;) raw.push_back(detail::parse_integer(tok, "weight"));
  return detail::make_game(quota, raw);
}

inline std::string to_game_text(const Game& g) {
  std::string s = std::to_string(g.quota()) + "\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(g.weight(i));
  }
  return s + "\n";
}

inline Game parse_game_json(const nlohmann::json& j) {
  if (!j.is_object()) throw invalid_game("malformed game JSON: expected an object");
  if (!j.contains("quota") || !j["quota"].is_number_integer())
    throw invalid_game("malformed game JSON: \"quota\" must be an integer");
  if (!j.contains("weights") || !j["weights"].is_array())
    throw invalid_game("malformed game JSON: \"weights\" must be an array");
  std::vector<std::int64_t> raw;
  for (const auto& w : j["weights"]) {
    if (!w.is_number_integer()) throw invalid_game("malformed game JSON: weights must be integers");
    raw.push_back(w.get<std::int64_t>());
  }
  std::optional<std::string> label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw invalid_game("malformed game JSON: \"label\" must be a string");
    label = j["label"].get<std::string>();
  }
  return detail::make_game(j["quota"].get<std::int64_t>(), raw, std::move(label));
}

inline Game parse_game_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_game(std::string("malformed game JSON: ") + e.what());
  }
  return parse_game_json(j);
}

inline nlohmann::json to_game_json(const Game& g) {
  nlohmann::json j{{"quota", g.quota()}, {"weights", std::vector<weight_t>(g.weights().begin(), g.weights().end())}};
  if (g.label()) j["label"] = *g.label();
  return j;
}

// Shell-friendly "q;w1,w2,...".
inline Game parse_game_inline(std::string_view spec) {
  const auto semi = spec.find(';');
  if (semi == std::string_view::npos) throw invalid_game("malformed inline game: expected \"quota;w1,w2,...\"");
  const auto quota = detail::parse_integer(detail::trim(spec.substr(0, semi)), "quota");
  std::vector<std::int64_t> raw;
  auto rest = spec.substr(semi + 1);
  while (!detail::trim(rest).empty()) {
    const auto comma = rest.find(',');
    raw.push_back(detail::parse_integer(detail::trim(rest.substr(0, comma)), "weight"));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return detail::make_game(quota, raw);
}

// Accepts either file format; JSON is recognised by a leading '{'.
inline Game load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_game("cannot read game file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto body = detail::trim(text);
  if (!body.empty() && body.front() == '{') return parse_game_json_text(body);
  return parse_game_text(text);
}

}  // namespace wvg
