#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hoops/belief.hpp"
#include "hoops/observations.hpp"

namespace hoops {

// Generic observation for the linear-Gaussian engine: response has mean
// sum_j coef_j * theta_j + offset and the given noise variance.
struct LinearRow {
  double response = 0.0;
  double noise_var = 1.0;
  double offset = 0.0;
  std::vector<std::pair<int, double>> coef;
};

// Per-(design, belief-index) sufficient statistics. The design matrix X has
// one row per observation with +1 on each attacker's offensive coordinate
// and -1 on each defender's defensive coordinate; g holds the +/-1 home
// flags and W the possession weights. None of it depends on the
// hyperparameters, so fitting loops reuse one compilation.
struct CompiledDesign {
  Eigen::MatrixXd xtw_x;   // X' W X
  Eigen::VectorXd xtw_y;   // X' W y
  Eigen::VectorXd xtw_g;   // X' W g
  double ytw_y = 0.0;      // y' W y
  double gtw_y = 0.0;      // g' W y
  double sum_w = 0.0;      // 1' W 1
  double sum_log_w = 0.0;  // sum log w_i
  long n_rows = 0;

  int dim() const { return static_cast<int>(xtw_y.size()); }
};

CompiledDesign compile_design(const ObservationSet& obs,
                              const PlayerIndex& belief_index);

// Exact Gaussian posterior given interval observations. The home bonus
// gamma enters each row's mean as a known +/- offset; row noise variance is
// sigma^2 / weight. Throws when a row references an unindexed player or
// the prior covariance cannot be factorized.
GaussianBelief posterior_update(const GaussianBelief& prior,
                                const ObservationSet& obs,
                                const HyperParams& hyper,
                                double* jitter_used = nullptr);
GaussianBelief posterior_update(const GaussianBelief& prior,
                                const CompiledDesign& design,
                                const HyperParams& hyper,
                                double* jitter_used = nullptr);

// Log density of the responses with abilities integrated out:
// y ~ N(X m0 + gamma g, X Cov0 X' + sigma^2 W^-1).
double log_marginal_likelihood(const GaussianBelief& prior,
                               const ObservationSet& obs,
                               const HyperParams& hyper);
double log_marginal_likelihood(const GaussianBelief& prior,
                               const CompiledDesign& design,
                               const HyperParams& hyper);

// Convenience form with the standard independent prior over the set's own
// players.
double log_marginal_likelihood(const HyperParams& hyper,
                               const ObservationSet& obs);

// Generic-row variants of the two operations above (same math, arbitrary
// coefficients and offsets).
GaussianBelief posterior_update_rows(const GaussianBelief& prior,
                                     const std::vector<LinearRow>& rows);
double log_marginal_likelihood_rows(const GaussianBelief& prior,
                                    const std::vector<LinearRow>& rows);

}  // namespace hoops
