#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

namespace hoops {

// Population-level model parameters: Gaussian ability priors for offense
// (mu_alpha, sigma_alpha) and defense (mu_beta, sigma_beta), the per-100-
// possession home advantage gamma, and the observation noise scale sigma.
struct HyperParams {
  double mu_alpha = 9.82;
  double sigma_alpha = 2.55;
  double mu_beta = -9.12;
  double sigma_beta = 1.82;
  double gamma = 1.43;
  double sigma = 106.8;

  void validate() const {
    if (!(sigma_alpha > 0) || !(sigma_beta > 0) || !(sigma > 0))
      throw std::invalid_argument("scale hyperparameters must be positive");
  }

  // Expected points per possession for the home side when both lineups sit
  // at the prior means.
  double home_points_per_possession() const {
    return (5.0 * mu_alpha - 5.0 * mu_beta + 2.0 * gamma) / 100.0;
  }
};

// Year-to-year ability carry-over: ability' = p * ability + (1-p) * prior
// mean + fresh noise with scale s_alpha or s_beta.
struct TransitionParams {
  double p = 0.83;
  double s_alpha = 1.23;
  double s_beta = 0.59;

  void validate() const {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("persistence p must lie in [0,1]");
    if (!(s_alpha >= 0.0) || !(s_beta >= 0.0))
      throw std::invalid_argument("transition noise scales must be >= 0");
  }
};

HyperParams hyper_from_file(const std::filesystem::path& path);
void hyper_to_file(const HyperParams& h, const std::filesystem::path& path);
TransitionParams transition_from_file(const std::filesystem::path& path);
void transition_to_file(const TransitionParams& t,
                        const std::filesystem::path& path);

}  // namespace hoops
