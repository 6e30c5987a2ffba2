#include "hoops/belief.hpp"

#include <fstream>
#include <sstream>

#include "hoops/csv.hpp"
#include "hoops/io_util.hpp"

namespace hoops {

bool GaussianBelief::is_psd() const {
  if (cov.rows() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov,
                                                    Eigen::EigenvaluesOnly);
  double lo = es.eigenvalues().minCoeff();
  double hi = es.eigenvalues().maxCoeff();
  return lo >= -1e-8 * std::max(hi, 1.0);
}

void GaussianBelief::check_consistent() const {
  if (mean.size() != index.dim() || cov.rows() != index.dim() ||
      cov.cols() != index.dim())
    throw std::logic_error("belief dimensions out of sync with player index");
}

GaussianBelief prior_belief(const std::vector<PlayerId>& players,
                            const HyperParams& hyper) {
  if (players.empty())
    throw std::invalid_argument("prior_belief: empty player list");
  hyper.validate();
  GaussianBelief b;
  b.index = PlayerIndex(players);  // throws on duplicates
  int d = b.index.dim();
  b.mean.resize(d);
  b.cov = Eigen::MatrixXd::Zero(d, d);
  double va = hyper.sigma_alpha * hyper.sigma_alpha;
  double vb = hyper.sigma_beta * hyper.sigma_beta;
  for (int s = 0; s < b.index.size(); ++s) {
    int oc = PlayerIndex::offense_coord_of_slot(s);
    int dc = PlayerIndex::defense_coord_of_slot(s);
    b.mean(oc) = hyper.mu_alpha;
    b.mean(dc) = hyper.mu_beta;
    b.cov(oc, oc) = va;
    b.cov(dc, dc) = vb;
  }
  return b;
}

GaussianBelief marginalize(const GaussianBelief& belief,
                           const std::vector<PlayerId>& keep) {
  std::vector<int> coords;
  coords.reserve(2 * keep.size());
  for (const auto& id : keep) {
    coords.push_back(belief.index.offense_coord(id));
    coords.push_back(belief.index.defense_coord(id));
  }
  GaussianBelief out;
  out.index = PlayerIndex(keep);
  int d = static_cast<int>(coords.size());
  out.mean.resize(d);
  out.cov.resize(d, d);
  for (int i = 0; i < d; ++i) {
    out.mean(i) = belief.mean(coords[i]);
    for (int j = 0; j < d; ++j) out.cov(i, j) = belief.cov(coords[i], coords[j]);
  }
  return out;
}

Eigen::LLT<Eigen::MatrixXd> llt_with_jitter(const Eigen::MatrixXd& m,
                                            double* jitter_used) {
  if (jitter_used) *jitter_used = 0.0;
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() == Eigen::Success) return llt;
  int d = static_cast<int>(m.rows());
  double base = 1e-10 * m.trace() / std::max(d, 1);
  if (base <= 0) base = 1e-12;
  double jitter = base;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Eigen::MatrixXd mj = m;
    mj.diagonal().array() += jitter;
    llt.compute(mj);
    if (llt.info() == Eigen::Success) {
      if (jitter_used) *jitter_used = jitter;
      return llt;
    }
    jitter *= 100.0;
  }
  throw std::runtime_error("covariance not positive definite (jitter failed)");
}

static constexpr const char* kBeliefMagic = "hoops_belief";
static constexpr int kBeliefVersion = 1;

void save_belief(const GaussianBelief& belief,
                 const std::filesystem::path& path) {
  belief.check_consistent();
  std::ostringstream out;
  out << kBeliefMagic << "," << kBeliefVersion << "\n";
  out << "players," << belief.index.size() << "\n";
  for (const auto& p : belief.index.players()) out << "player," << p << "\n";
  out << "mean";
  for (int i = 0; i < belief.dim(); ++i) out << "," << fmt_double(belief.mean(i));
  out << "\n";
  for (int i = 0; i < belief.dim(); ++i) {
    out << "cov";
    for (int j = 0; j < belief.dim(); ++j)
      out << "," << fmt_double(belief.cov(i, j));
    out << "\n";
  }
  atomic_write_file(path, out.str());
}

GaussianBelief load_belief(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open belief file: " + path.string());
  std::string line;
  auto next = [&](const char* what) {
    if (!std::getline(in, line))
      throw std::runtime_error(std::string("belief file truncated at ") + what);
    return split_csv(line);
  };
  auto header = next("header");
  if (header.size() != 2 || header[0] != kBeliefMagic ||
      std::stoi(header[1]) != kBeliefVersion)
    throw std::runtime_error("unrecognized belief file format: " + path.string());
  auto pcount = next("players");
  if (pcount.size() != 2 || pcount[0] != "players")
    throw std::runtime_error("belief file missing player count");
  int n = std::stoi(pcount[1]);
  GaussianBelief b;
  std::vector<PlayerId> players;
  players.reserve(n);
  for (int i = 0; i < n; ++i) {
    auto row = next("player row");
    if (row.size() != 2 || row[0] != "player")
      throw std::runtime_error("belief file bad player row");
    players.push_back(row[1]);
  }
  b.index = PlayerIndex(players);
  int d = 2 * n;
  auto mrow = next("mean row");
  if (static_cast<int>(mrow.size()) != d + 1 || mrow[0] != "mean")
    throw std::runtime_error("belief file bad mean row");
  b.mean.resize(d);
  for (int i = 0; i < d; ++i) b.mean(i) = std::stod(mrow[i + 1]);
  b.cov.resize(d, d);
  for (int i = 0; i < d; ++i) {
    auto crow = next("cov row");
    if (static_cast<int>(crow.size()) != d + 1 || crow[0] != "cov")
      throw std::runtime_error("belief file bad covariance row");
    for (int j = 0; j < d; ++j) b.cov(i, j) = std::stod(crow[j + 1]);
  }
  return b;
}

}  // namespace hoops
