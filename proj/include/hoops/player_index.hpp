#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hoops {

using PlayerId = std::string;
using TeamId = std::string;
using SeasonId = std::string;
using GameId = std::string;

// Bijection between player ids and coordinate pairs in an ability vector.
// Player in slot i owns the offensive coordinate 2i and the defensive
// coordinate 2i+1.
class PlayerIndex {
 public:
  PlayerIndex() = default;

  explicit PlayerIndex(std::vector<PlayerId> players) {
    for (auto& p : players) add(std::move(p));
  }

  int add(PlayerId id) {
    auto [it, inserted] = slot_.emplace(id, static_cast<int>(players_.size()));
    if (!inserted) throw std::invalid_argument("duplicate player id: " + id);
    players_.push_back(std::move(id));
    return it->second;
  }

  bool contains(const PlayerId& id) const { return slot_.count(id) > 0; }

  int slot(const PlayerId& id) const {
    auto it = slot_.find(id);
    if (it == slot_.end())
      throw std::out_of_range("player not indexed: " + id);
    return it->second;
  }

  int offense_coord(const PlayerId& id) const { return 2 * slot(id); }
  int defense_coord(const PlayerId& id) const { return 2 * slot(id) + 1; }
  static int offense_coord_of_slot(int s) { return 2 * s; }
  static int defense_coord_of_slot(int s) { return 2 * s + 1; }
  static bool is_offense_coord(int c) { return (c & 1) == 0; }

  const PlayerId& player_of_slot(int s) const { return players_.at(s); }
  const std::vector<PlayerId>& players() const { return players_; }

  int size() const { return static_cast<int>(players_.size()); }
  int dim() const { return 2 * size(); }
  bool empty() const { return players_.empty(); }

  bool operator==(const PlayerIndex& other) const {
    return players_ == other.players_;
  }

 private:
  std::vector<PlayerId> players_;
  std::unordered_map<PlayerId, int> slot_;
};

}  // namespace hoops
