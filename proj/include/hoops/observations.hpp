#pragma once

#include <array>
#include <filesystem>
#include <set>

#include "hoops/intervals.hpp"
#include "hoops/player_index.hpp"

namespace hoops {

// One regression row: response is points per 100 possessions scored by the
// attacking five against the defending five; weight is the possession
// count, so the response noise variance is sigma^2 / weight.
struct ObservationRow {
  double response = 0.0;
  double weight = 0.0;
  std::array<int, 5> attackers{};  // slots in the owning set's index
  std::array<int, 5> defenders{};
  bool home_attacking = false;
  SeasonId season;
};

struct ObservationSet {
  std::vector<ObservationRow> rows;
  PlayerIndex index;

  std::vector<PlayerId> attacker_ids(const ObservationRow& r) const {
    std::vector<PlayerId> out;
    for (int s : r.attackers) out.push_back(index.player_of_slot(s));
    return out;
  }
  std::vector<PlayerId> defender_ids(const ObservationRow& r) const {
    std::vector<PlayerId> out;
    for (int s : r.defenders) out.push_back(index.player_of_slot(s));
    return out;
  }

  double total_weight() const {
    double w = 0;
    for (const auto& r : rows) w += r.weight;
    return w;
  }
};

// Builds regression rows from included intervals. Empty season filter
// accepts every season. Throws if an interval's lineups overlap.
ObservationSet build_observations(const std::vector<Interval>& intervals,
                                  const std::set<SeasonId>& season_filter = {});

// Splits intervals by season label (ascending label order) and builds one
// set per season.
std::vector<ObservationSet> build_observations_by_season(
    const std::vector<Interval>& intervals);

std::vector<SeasonId> seasons_in(const std::vector<Interval>& intervals);

void write_observations_csv(const ObservationSet& set,
                            const std::filesystem::path& path);

}  // namespace hoops
