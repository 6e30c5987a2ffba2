#include "hoops/intervals.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hoops/csv.hpp"
#include "hoops/io_util.hpp"

namespace hoops {

const char* exclude_reason_name(ExcludeReason r) {
  switch (r) {
    case ExcludeReason::kNone:
      return "";
    case ExcludeReason::kUnresolvedLineup:
      return "unresolved_lineup";
    case ExcludeReason::kInconsistent:
      return "inconsistent";
  }
  return "";
}

ExcludeReason exclude_reason_from_name(const std::string& s) {
  if (s.empty()) return ExcludeReason::kNone;
  if (s == "unresolved_lineup") return ExcludeReason::kUnresolvedLineup;
  if (s == "inconsistent") return ExcludeReason::kInconsistent;
  throw std::runtime_error("unknown exclusion reason: " + s);
}

static std::string join_players(const std::vector<PlayerId>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(';');
    out += v[i];
  }
  return out;
}

static std::vector<PlayerId> split_players(const std::string& s) {
  std::vector<PlayerId> out;
  if (s.empty()) return out;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

static constexpr const char* kIntervalHeader =
    "game_id,season,idx,duration_s,home_players,away_players,n_home_poss,"
    "n_away_poss,pts_home,pts_away,excluded,reason";

void write_intervals_csv(const std::vector<Interval>& intervals,
                         const std::filesystem::path& path) {
  std::ostringstream out;
  out << kIntervalHeader << "\n";
  for (const auto& iv : intervals) {
    out << iv.game_id << ',' << iv.season << ',' << iv.idx << ','
        << fmt_double(iv.duration_s) << ',' << join_players(iv.home_players)
        << ',' << join_players(iv.away_players) << ',' << iv.n_home_poss << ','
        << iv.n_away_poss << ',' << iv.pts_home << ',' << iv.pts_away << ','
        << (iv.excluded ? 1 : 0) << ',' << exclude_reason_name(iv.reason)
        << "\n";
  }
  atomic_write_file(path, out.str());
}

std::vector<Interval> read_intervals_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open intervals file: " + path.string());
  std::string line;
  if (!std::getline(in, line) || split_csv(line) != split_csv(kIntervalHeader))
    throw std::runtime_error("bad intervals header in " + path.string());
  std::vector<Interval> out;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = split_csv(line);
    if (f.size() != 12)
      throw std::runtime_error("intervals line " + std::to_string(lineno) +
                               ": expected 12 fields, got " +
                               std::to_string(f.size()));
    Interval iv;
    iv.game_id = f[0];
    iv.season = f[1];
    iv.idx = std::stoi(f[2]);
    iv.duration_s = std::stod(f[3]);
    iv.home_players = split_players(f[4]);
    iv.away_players = split_players(f[5]);
    iv.n_home_poss = std::stoi(f[6]);
    iv.n_away_poss = std::stoi(f[7]);
    iv.pts_home = std::stoi(f[8]);
    iv.pts_away = std::stoi(f[9]);
    iv.excluded = f[10] == "1";
    iv.reason = exclude_reason_from_name(f[11]);
    out.push_back(std::move(iv));
  }
  return out;
}

}  // namespace hoops
