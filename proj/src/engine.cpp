#include "hoops/engine.hpp"

#include <cmath>

namespace hoops {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;

// Representation of the prior precision pieces the formulas need. A purely
// diagonal covariance (the independent prior) skips the dense factorization.
struct PriorPrecision {
  bool diagonal = false;
  Eigen::VectorXd diag_inv;       // when diagonal
  Eigen::MatrixXd inv;            // when dense
  double log_det_cov = 0.0;       // log |Cov0|
  Eigen::VectorXd precision_mean; // Cov0^-1 m0
};

bool is_diagonal(const Eigen::MatrixXd& m) {
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (i != j && m(i, j) != 0.0) return false;
  return true;
}

PriorPrecision prior_precision(const GaussianBelief& prior,
                               double* jitter_used) {
  PriorPrecision out;
  int d = prior.dim();
  if (is_diagonal(prior.cov)) {
    out.diagonal = true;
    out.diag_inv.resize(d);
    out.precision_mean.resize(d);
    out.log_det_cov = 0.0;
    for (int i = 0; i < d; ++i) {
      double v = prior.cov(i, i);
      if (!(v > 0.0))
        throw std::runtime_error("prior covariance has non-positive diagonal");
      out.diag_inv(i) = 1.0 / v;
      out.precision_mean(i) = prior.mean(i) / v;
      out.log_det_cov += std::log(v);
    }
    if (jitter_used) *jitter_used = 0.0;
    return out;
  }
  auto llt = llt_with_jitter(prior.cov, jitter_used);
  out.log_det_cov =
      2.0 * llt.matrixLLT().diagonal().array().log().sum();
  out.inv = llt.solve(Eigen::MatrixXd::Identity(d, d));
  out.precision_mean = llt.solve(prior.mean);
  return out;
}

Eigen::MatrixXd posterior_precision(const PriorPrecision& pp,
                                    const Eigen::MatrixXd& xtw_x,
                                    double sigma_sq) {
  Eigen::MatrixXd a = xtw_x / sigma_sq;
  if (pp.diagonal)
    a.diagonal() += pp.diag_inv;
  else
    a += pp.inv;
  return a;
}

}  // namespace

CompiledDesign compile_design(const ObservationSet& obs,
                              const PlayerIndex& belief_index) {
  int d = belief_index.dim();
  CompiledDesign c;
  c.xtw_x = Eigen::MatrixXd::Zero(d, d);
  c.xtw_y = Eigen::VectorXd::Zero(d);
  c.xtw_g = Eigen::VectorXd::Zero(d);

  // Map set slots to belief coordinates once.
  std::vector<int> off_coord(obs.index.size()), def_coord(obs.index.size());
  for (int s = 0; s < obs.index.size(); ++s) {
    const PlayerId& id = obs.index.player_of_slot(s);
    if (!belief_index.contains(id))
      throw std::invalid_argument("observation references unindexed player: " +
                                  id);
    off_coord[s] = belief_index.offense_coord(id);
    def_coord[s] = belief_index.defense_coord(id);
  }

  int coords[10];
  double signs[10];
  for (const auto& r : obs.rows) {
    for (int i = 0; i < 5; ++i) {
      coords[i] = off_coord[r.attackers[i]];
      signs[i] = 1.0;
      coords[5 + i] = def_coord[r.defenders[i]];
      signs[5 + i] = -1.0;
    }
    double w = r.weight;
    double g = r.home_attacking ? 1.0 : -1.0;
    for (int i = 0; i < 10; ++i) {
      double wi = w * signs[i];
      c.xtw_y(coords[i]) += wi * r.response;
      c.xtw_g(coords[i]) += wi * g;
      for (int j = 0; j < 10; ++j)
        c.xtw_x(coords[i], coords[j]) += wi * signs[j];
    }
    c.ytw_y += w * r.response * r.response;
    c.gtw_y += w * g * r.response;
    c.sum_w += w;
    c.sum_log_w += std::log(w);
    ++c.n_rows;
  }
  return c;
}

GaussianBelief posterior_update(const GaussianBelief& prior,
                                const ObservationSet& obs,
                                const HyperParams& hyper,
                                double* jitter_used) {
  return posterior_update(prior, compile_design(obs, prior.index), hyper,
                          jitter_used);
}

GaussianBelief posterior_update(const GaussianBelief& prior,
                                const CompiledDesign& design,
                                const HyperParams& hyper,
                                double* jitter_used) {
  prior.check_consistent();
  hyper.validate();
  if (design.dim() != prior.dim())
    throw std::invalid_argument("design compiled against a different index");
  if (design.n_rows == 0) return prior;

  double sigma_sq = hyper.sigma * hyper.sigma;
  PriorPrecision pp = prior_precision(prior, jitter_used);
  Eigen::MatrixXd a = posterior_precision(pp, design.xtw_x, sigma_sq);
  Eigen::VectorXd rhs =
      pp.precision_mean +
      (design.xtw_y - hyper.gamma * design.xtw_g) / sigma_sq;

  auto llt = llt_with_jitter(a);
  GaussianBelief post;
  post.index = prior.index;
  post.mean = llt.solve(rhs);
  post.cov = llt.solve(Eigen::MatrixXd::Identity(prior.dim(), prior.dim()));
  post.cov = ((post.cov + post.cov.transpose()) * 0.5).eval();
  return post;
}

double log_marginal_likelihood(const GaussianBelief& prior,
                               const ObservationSet& obs,
                               const HyperParams& hyper) {
  return log_marginal_likelihood(prior, compile_design(obs, prior.index),
                                 hyper);
}

double log_marginal_likelihood(const GaussianBelief& prior,
                               const CompiledDesign& design,
                               const HyperParams& hyper) {
  prior.check_consistent();
  hyper.validate();
  if (design.dim() != prior.dim())
    throw std::invalid_argument("design compiled against a different index");
  if (design.n_rows == 0) return 0.0;

  double sigma_sq = hyper.sigma * hyper.sigma;
  double gamma = hyper.gamma;
  const Eigen::VectorXd& m0 = prior.mean;

  PriorPrecision pp = prior_precision(prior, nullptr);
  Eigen::MatrixXd a = posterior_precision(pp, design.xtw_x, sigma_sq);
  auto llt_a = llt_with_jitter(a);
  double log_det_a = 2.0 * llt_a.matrixLLT().diagonal().array().log().sum();

  // Woodbury pieces, with r = y - X m0 - gamma g.
  Eigen::VectorXd sx_m0 = design.xtw_x * m0;
  Eigen::VectorXd b =
      (design.xtw_y - sx_m0 - gamma * design.xtw_g) / sigma_sq;
  double rtw_r = design.ytw_y - 2.0 * m0.dot(design.xtw_y) -
                 2.0 * gamma * design.gtw_y + m0.dot(sx_m0) +
                 2.0 * gamma * m0.dot(design.xtw_g) +
                 gamma * gamma * design.sum_w;
  double quad = rtw_r / sigma_sq - b.dot(llt_a.solve(b));

  double n = static_cast<double>(design.n_rows);
  double log_det_v = n * std::log(sigma_sq) - design.sum_log_w;
  double log_det = log_det_v + pp.log_det_cov + log_det_a;
  if (!std::isfinite(log_det) || !std::isfinite(quad))
    throw std::runtime_error("marginal likelihood: singular implied covariance");
  return -0.5 * (n * kLog2Pi + log_det + quad);
}

double log_marginal_likelihood(const HyperParams& hyper,
                               const ObservationSet& obs) {
  GaussianBelief prior = prior_belief(obs.index.players(), hyper);
  return log_marginal_likelihood(prior, obs, hyper);
}

GaussianBelief posterior_update_rows(const GaussianBelief& prior,
                                     const std::vector<LinearRow>& rows) {
  prior.check_consistent();
  if (rows.empty()) return prior;
  int d = prior.dim();
  PriorPrecision pp = prior_precision(prior, nullptr);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd rhs = pp.precision_mean;
  for (const auto& row : rows) {
    if (!(row.noise_var > 0))
      throw std::invalid_argument("row noise variance must be positive");
    double inv_v = 1.0 / row.noise_var;
    double adj = row.response - row.offset;
    for (const auto& [i, ci] : row.coef) {
      rhs(i) += ci * adj * inv_v;
      for (const auto& [j, cj] : row.coef) a(i, j) += ci * cj * inv_v;
    }
  }
  if (pp.diagonal)
    a.diagonal() += pp.diag_inv;
  else
    a += pp.inv;
  auto llt = llt_with_jitter(a);
  GaussianBelief post;
  post.index = prior.index;
  post.mean = llt.solve(rhs);
  post.cov = llt.solve(Eigen::MatrixXd::Identity(d, d));
  post.cov = ((post.cov + post.cov.transpose()) * 0.5).eval();
  return post;
}

double log_marginal_likelihood_rows(const GaussianBelief& prior,
                                    const std::vector<LinearRow>& rows) {
  prior.check_consistent();
  if (rows.empty()) return 0.0;
  int d = prior.dim();
  PriorPrecision pp = prior_precision(prior, nullptr);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(d);
  double rtv_r = 0.0, log_det_v = 0.0;
  for (const auto& row : rows) {
    if (!(row.noise_var > 0))
      throw std::invalid_argument("row noise variance must be positive");
    double inv_v = 1.0 / row.noise_var;
    double r = row.response - row.offset;
    for (const auto& [i, ci] : row.coef) r -= ci * prior.mean(i);
    rtv_r += r * r * inv_v;
    log_det_v += std::log(row.noise_var);
    for (const auto& [i, ci] : row.coef) {
      b(i) += ci * r * inv_v;
      for (const auto& [j, cj] : row.coef) a(i, j) += ci * cj * inv_v;
    }
  }
  if (pp.diagonal)
    a.diagonal() += pp.diag_inv;
  else
    a += pp.inv;
  auto llt_a = llt_with_jitter(a);
  double log_det_a = 2.0 * llt_a.matrixLLT().diagonal().array().log().sum();
  double quad = rtv_r - b.dot(llt_a.solve(b));
  double n = static_cast<double>(rows.size());
  double log_det = log_det_v + pp.log_det_cov + log_det_a;
  if (!std::isfinite(log_det) || !std::isfinite(quad))
    throw std::runtime_error("marginal likelihood: singular implied covariance");
  return -0.5 * (n * kLog2Pi + log_det + quad);
}

}  // namespace hoops
