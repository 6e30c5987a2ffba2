#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hoops/player_index.hpp"

namespace hoops {

enum class ExcludeReason {
  kNone = 0,
  kUnresolvedLineup,  // on-court players could not be inferred
  kInconsistent,      // e.g. points recorded without a possession
};

const char* exclude_reason_name(ExcludeReason r);
ExcludeReason exclude_reason_from_name(const std::string& s);

// One constant-lineup stretch of a game. Lineup vectors are sorted and
// hold exactly 5 ids each when the lineup is known, and may be empty on
// excluded intervals.
struct Interval {
  GameId game_id;
  SeasonId season;
  int idx = 0;  // position within the game, including excluded intervals
  double duration_s = 0.0;
  std::vector<PlayerId> home_players;
  std::vector<PlayerId> away_players;
  int n_home_poss = 0;
  int n_away_poss = 0;
  int pts_home = 0;
  int pts_away = 0;
  bool excluded = false;
  ExcludeReason reason = ExcludeReason::kNone;

  bool operator==(const Interval& other) const = default;
};

void write_intervals_csv(const std::vector<Interval>& intervals,
                         const std::filesystem::path& path);
std::vector<Interval> read_intervals_csv(const std::filesystem::path& path);

}  // namespace hoops
