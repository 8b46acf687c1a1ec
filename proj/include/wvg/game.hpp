#pragma once

#include "wvg/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wvg {

using player_id = std::size_t;
using weight_t = std::uint64_t;

// Keeps every partial sum of weights (and every DP index) far from overflow.
inline constexpr weight_t max_total_weight = weight_t{1} << 52;

// A weighted voting game [q; w_1, ..., w_n]. Immutable once built.
class Game {
 public:
  Game(weight_t quota, std::vector<weight_t> weights, std::optional<std::string> label = std::nullopt)
      : quota_(quota), weights_(std::move(weights)), label_(std::move(label)) {
    if (quota_ < 1) throw invalid_game("quota \xE2\x89\xA5 1 violated");
    weight_t total = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (weights_[i] < 1)
        throw invalid_game("weight \xE2\x89\xA5 1 violated (player " + std::to_string(i) + ")");
      if (weights_[i] > max_total_weight - total)
        throw invalid_game("total weight exceeds the supported maximum 2^52");
      total += weights_[i];
    }
    if (total < quota_)
      throw invalid_game("total weight \xE2\x89\xA5 quota violated (total " + std::to_string(total) +
                         " < quota " + std::to_string(quota_) + ")");
    total_ = total;
  }

  weight_t quota() const noexcept { return quota_; }
  std::span<const weight_t> weights() const noexcept { return weights_; }
  weight_t weight(player_id i) const { return weights_.at(i); }
  std::size_t size() const noexcept { return weights_.size(); }
  weight_t total_weight() const noexcept { return total_; }
  weight_t max_weight() const noexcept { return *std::max_element(weights_.begin(), weights_.end()); }
  const std::optional<std::string>& label() const noexcept { return label_; }

  friend bool operator==(const Game& a, const Game& b) {
    return a.quota_ == b.quota_ && a.weights_ == b.weights_;
  }

 private:
  weight_t quota_;
  std::vector<weight_t> weights_;
  std::optional<std::string> label_;
  weight_t total_ = 0;
};

inline weight_t total_weight(const Game& g) noexcept { return g.total_weight(); }
inline bool is_unanimity(const Game& g) noexcept { return g.quota() == g.total_weight(); }

// A set of players, kept sorted and duplicate-free.
class Coalition {
 public:
  Coalition() = default;
  Coalition(std::initializer_list<player_id> members) : Coalition(std::vector<player_id>(members)) {}
  explicit Coalition(std::vector<player_id> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw invalid_coalition("coalition lists a player more than once");
  }

  // Bit i of mask is player i.
  static Coalition from_mask(std::uint64_t mask) {
    Coalition c;
    for (player_id i = 0; mask != 0; ++i, mask >>= 1)
      if (mask & 1u) c.members_.push_back(i);
    return c;
  }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (auto i : members_) {
      if (i >= 64) throw invalid_coalition("coalition does not fit a 64-bit mask");
      m |= std::uint64_t{1} << i;
    }
    return m;
  }

  std::span<const player_id> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(player_id i) const { return std::binary_search(members_.begin(), members_.end(), i); }

  Coalition with(player_id i) const {
    auto m = members_;
    m.push_back(i);
    return Coalition(std::move(m));
  }

  void validate_for(const Game& g) const {
    if (!members_.empty() && members_.back() >= g.size())
      throw invalid_coalition("player " + std::to_string(members_.back()) + " out of range for a " +
                              std::to_string(g.size()) + "-player game");
  }

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  std::vector<player_id> members_;
};

inline weight_t coalition_weight(const Game& g, const Coalition& c) {
  c.validate_for(g);
  weight_t w = 0;
  for (auto i : c.members()) w += g.weight(i);
  return w;
}

enum class outcome { lose, win };

inline outcome evaluate(const Game& g, const Coalition& c) {
  return coalition_weight(g, c) >= g.quota() ? outcome::win : outcome::lose;
}

inline bool is_critical(const Game& g, const Coalition& c, player_id player) {
  c.validate_for(g);
  if (player >= g.size()) throw invalid_coalition("player " + std::to_string(player) + " out of range");
  if (c.contains(player)) throw precondition_error("player is already a member of the coalition");
  const weight_t w = coalition_weight(g, c);
  return w < g.quota() && w + g.weight(player) >= g.quota();
}

struct SplitSpec {
  player_id player = 0;
  std::vector<weight_t> parts;

  friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

struct MergeSpec {
  Coalition coalition;
};

struct AnnexSpec {
  player_id annexer = 0;
  Coalition annexed;
};

// Result of a structural transform. mapping[old] is the new identifier of an
// untouched player, or empty for players that were replaced; created lists the
// identifiers of the new players (split parts in order, or the merged player).
struct Transformed {
  Game game;
  std::vector<std::optional<player_id>> mapping;
  std::vector<player_id> created;
};

inline Transformed apply_split(const Game& g, const SplitSpec& spec) {
  if (spec.player >= g.size()) throw invalid_split("split player out of range");
  if (spec.parts.empty()) throw invalid_split("split has no parts");
  weight_t sum = 0;
  for (auto p : spec.parts) {
    if (p < 1) throw invalid_split("split part \xE2\x89\xA5 1 violated");
    sum += p;
  }
  if (sum != g.weight(spec.player))
    throw invalid_split("split parts sum to " + std::to_string(sum) + ", expected weight " +
                        std::to_string(g.weight(spec.player)));

  std::vector<weight_t> w;
  std::vector<std::optional<player_id>> mapping(g.size());
  w.reserve(g.size() + spec.parts.size() - 1);
  for (player_id i = 0; i < g.size(); ++i) {
    if (i == spec.player) continue;
    mapping[i] = w.size();
    w.push_back(g.weight(i));
  }
  std::vector<player_id> created;
  for (auto p : spec.parts) {
    created.push_back(w.size());
    w.push_back(p);
  }
  return {Game(g.quota(), std::move(w), g.label()), std::move(mapping), std::move(created)};
}

inline Transformed apply_merge(const Game& g, const MergeSpec& spec) {
  if (spec.coalition.empty()) throw invalid_merge("cannot merge an empty coalition");
  spec.coalition.validate_for(g);
  std::vector<weight_t> w;
  std::vector<std::optional<player_id>> mapping(g.size());
  weight_t merged = 0;
  for (player_id i = 0; i < g.size(); ++i) {
    if (spec.coalition.contains(i)) {
      merged += g.weight(i);
      continue;
    }
    mapping[i] = w.size();
    w.push_back(g.weight(i));
  }
  const player_id id = w.size();
  w.push_back(merged);
  return {Game(g.quota(), std::move(w), g.label()), std::move(mapping), {id}};
}

inline Transformed apply_annex(const Game& g, const AnnexSpec& spec) {
  if (spec.annexed.contains(spec.annexer)) throw invalid_merge("annexer is a member of the annexed coalition");
  if (spec.annexer >= g.size()) throw invalid_merge("annexer out of range");
  return apply_merge(g, MergeSpec{spec.annexed.with(spec.annexer)});
}

}  // namespace wvg
