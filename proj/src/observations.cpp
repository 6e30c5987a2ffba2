#include "hoops/observations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hoops/csv.hpp"
#include "hoops/io_util.hpp"

namespace hoops {

static void check_lineups(const Interval& iv) {
  if (iv.home_players.size() != 5 || iv.away_players.size() != 5)
    throw std::invalid_argument("interval " + iv.game_id + "#" +
                                std::to_string(iv.idx) +
                                ": included interval without 5v5 lineups");
  for (const auto& p : iv.home_players)
    if (std::find(iv.away_players.begin(), iv.away_players.end(), p) !=
        iv.away_players.end())
      throw std::invalid_argument("interval " + iv.game_id + "#" +
                                  std::to_string(iv.idx) +
                                  ": player on both lineups: " + p);
}

ObservationSet build_observations(const std::vector<Interval>& intervals,
                                  const std::set<SeasonId>& season_filter) {
  auto wanted = [&](const Interval& iv) {
    return !iv.excluded &&
           (season_filter.empty() || season_filter.count(iv.season) > 0);
  };

  // Deterministic index: sorted ids over all referenced players.
  std::set<PlayerId> ids;
  for (const auto& iv : intervals) {
    if (!wanted(iv)) continue;
    check_lineups(iv);
    ids.insert(iv.home_players.begin(), iv.home_players.end());
    ids.insert(iv.away_players.begin(), iv.away_players.end());
  }
  ObservationSet set;
  set.index = PlayerIndex(std::vector<PlayerId>(ids.begin(), ids.end()));

  auto slots = [&](const std::vector<PlayerId>& five) {
    std::array<int, 5> out{};
    for (int i = 0; i < 5; ++i) out[i] = set.index.slot(five[i]);
    return out;
  };

  for (const auto& iv : intervals) {
    if (!wanted(iv)) continue;
    auto home = slots(iv.home_players);
    auto away = slots(iv.away_players);
    if (iv.n_home_poss > 0) {
      ObservationRow r;
      r.response = 100.0 * iv.pts_home / iv.n_home_poss;
      r.weight = iv.n_home_poss;
      r.attackers = home;
      r.defenders = away;
      r.home_attacking = true;
      r.season = iv.season;
      set.rows.push_back(std::move(r));
    }
    if (iv.n_away_poss > 0) {
      ObservationRow r;
      r.response = 100.0 * iv.pts_away / iv.n_away_poss;
      r.weight = iv.n_away_poss;
      r.attackers = away;
      r.defenders = home;
      r.home_attacking = false;
      r.season = iv.season;
      set.rows.push_back(std::move(r));
    }
  }
  return set;
}

std::vector<SeasonId> seasons_in(const std::vector<Interval>& intervals) {
  std::set<SeasonId> s;
  for (const auto& iv : intervals) s.insert(iv.season);
  return {s.begin(), s.end()};
}

std::vector<ObservationSet> build_observations_by_season(
    const std::vector<Interval>& intervals) {
  std::vector<ObservationSet> out;
  for (const auto& season : seasons_in(intervals))
    out.push_back(build_observations(intervals, {season}));
  return out;
}

void write_observations_csv(const ObservationSet& set,
                            const std::filesystem::path& path) {
  std::ostringstream out;
  out << "response,weight,a1,a2,a3,a4,a5,d1,d2,d3,d4,d5,home_attacking,season\n";
  for (const auto& r : set.rows) {
    out << fmt_double(r.response) << ',' << fmt_double(r.weight);
    for (int s : r.attackers) out << ',' << set.index.player_of_slot(s);
    for (int s : r.defenders) out << ',' << set.index.player_of_slot(s);
    out << ',' << (r.home_attacking ? 1 : 0) << ',' << r.season << "\n";
  }
  atomic_write_file(path, out.str());
}

}  // namespace hoops
