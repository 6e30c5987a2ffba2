#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <optional>

#include "hoops/params.hpp"
#include "hoops/player_index.hpp"

namespace hoops {

// Joint Gaussian over all ability coordinates. Player in slot i has its
// offensive ability at coordinate 2i and its defensive ability at 2i+1;
// units are points per 100 possessions.
struct GaussianBelief {
  PlayerIndex index;
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;

  int dim() const { return static_cast<int>(mean.size()); }

  double offense_mean(const PlayerId& id) const {
    return mean(index.offense_coord(id));
  }
  double defense_mean(const PlayerId& id) const {
    return mean(index.defense_coord(id));
  }
  double offense_var(const PlayerId& id) const {
    int c = index.offense_coord(id);
    return cov(c, c);
  }
  double defense_var(const PlayerId& id) const {
    int c = index.defense_coord(id);
    return cov(c, c);
  }
  double offense_defense_cov(const PlayerId& id) const {
    return cov(index.offense_coord(id), index.defense_coord(id));
  }
  double combined_mean(const PlayerId& id) const {
    return offense_mean(id) + defense_mean(id);
  }
  double combined_var(const PlayerId& id) const {
    return offense_var(id) + defense_var(id) + 2.0 * offense_defense_cov(id);
  }

  // Symmetry-tolerant PSD check: smallest eigenvalue >= -1e-8 * largest.
  bool is_psd() const;

  void check_consistent() const;
};

// Independent ability priors for every listed player.
GaussianBelief prior_belief(const std::vector<PlayerId>& players,
                            const HyperParams& hyper);

// Marginal belief over a subset of players (rows/columns dropped).
GaussianBelief marginalize(const GaussianBelief& belief,
                           const std::vector<PlayerId>& keep);

// Cholesky with an escalating diagonal jitter fallback. Jitter starts at
// 1e-10 * trace/dim. Returns the factorization; sets *jitter_used to the
// amount added (0 when none was needed). Throws if still not factorizable.
Eigen::LLT<Eigen::MatrixXd> llt_with_jitter(const Eigen::MatrixXd& m,
                                            double* jitter_used = nullptr);

// Versioned CSV persistence of (index, mean, full covariance).
void save_belief(const GaussianBelief& belief,
                 const std::filesystem::path& path);
GaussianBelief load_belief(const std::filesystem::path& path);

}  // namespace hoops
