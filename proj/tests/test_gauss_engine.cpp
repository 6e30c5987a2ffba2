#include <doctest.h>

#include "hoops/engine.hpp"
#include "test_helpers.hpp"

using namespace hoops;
using namespace hoops::testing;

TEST_CASE("prior_belief lays out table values per player") {
  HyperParams h;  // defaults are the fitted values
  auto b = prior_belief({"P1"}, h);
  CHECK(b.dim() == 2);
  CHECK(b.mean(0) == doctest::Approx(9.82).epsilon(0));
  CHECK(b.mean(1) == doctest::Approx(-9.12).epsilon(0));
  CHECK(b.cov(0, 0) == doctest::Approx(6.5025).epsilon(1e-14));
  CHECK(b.cov(1, 1) == doctest::Approx(3.3124).epsilon(1e-14));
  CHECK(b.cov(0, 1) == 0.0);
}

TEST_CASE("prior_belief rejects empty and duplicate inputs") {
  HyperParams h;
  CHECK_THROWS(prior_belief({}, h));
  CHECK_THROWS(prior_belief({"P1", "P1"}, h));
}

TEST_CASE("prior_belief covariance trace scales with player count") {
  HyperParams h;
  int n = 7;
  auto b = prior_belief(player_pool(n), h);
  double expect = n * (h.sigma_alpha * h.sigma_alpha +
                       h.sigma_beta * h.sigma_beta);
  CHECK(b.cov.trace() == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("empty observation set leaves the prior untouched") {
  HyperParams h;
  auto prior = prior_belief(player_pool(6), h);
  ObservationSet empty;
  empty.index = PlayerIndex(player_pool(6));
  auto post = posterior_update(prior, empty, h);
  CHECK(post.mean == prior.mean);
  CHECK(post.cov == prior.cov);
}

TEST_CASE("textbook scalar conjugate update") {
  HyperParams h;
  auto prior = prior_belief({"P1"}, h);
  prior.mean << 0.0, 0.0;
  prior.cov = Eigen::Matrix2d::Identity();
  LinearRow row;
  row.response = 1.0;
  row.noise_var = 1.0;
  row.coef = {{0, 1.0}};
  auto post = posterior_update_rows(prior, {row});
  CHECK(post.mean(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(post.cov(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  // untouched coordinate keeps its prior
  CHECK(post.mean(1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(post.cov(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("posterior matches the dense normal-equations oracle") {
  HyperParams h;
  Rng rng(11);
  for (int rep = 0; rep < 5; ++rep) {
    auto obs = random_observation_set(6, 40, rng);
    auto prior = prior_belief(obs.index.players(), h);
    auto post = posterior_update(prior, obs, h);
    auto [omean, ocov] = dense_posterior_oracle(prior, obs, h);
    CHECK((post.mean - omean).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((post.cov - ocov).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("batch update equals sequential composition") {
  HyperParams h;
  Rng rng(12);
  auto all = random_observation_set(7, 50, rng);
  ObservationSet first, second;
  first.index = all.index;
  second.index = all.index;
  for (size_t i = 0; i < all.rows.size(); ++i)
    (i < 25 ? first : second).rows.push_back(all.rows[i]);
  auto prior = prior_belief(all.index.players(), h);
  auto chained = posterior_update(posterior_update(prior, first, h), second, h);
  auto batch = posterior_update(prior, all, h);
  CHECK((chained.mean - batch.mean).cwiseAbs().maxCoeff() < 1e-8);
  CHECK((chained.cov - batch.cov).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("observing never inflates coordinate variances") {
  HyperParams h;
  Rng rng(13);
  auto obs = random_observation_set(8, 30, rng);
  auto prior = prior_belief(obs.index.players(), h);
  auto post = posterior_update(prior, obs, h);
  for (int i = 0; i < prior.dim(); ++i)
    CHECK(post.cov(i, i) <= prior.cov(i, i) + 1e-12);
}

TEST_CASE("non-PSD prior covariance is rejected") {
  HyperParams h;
  Rng rng(14);
  auto obs = random_observation_set(5, 10, rng);
  auto prior = prior_belief(obs.index.players(), h);
  prior.cov = -Eigen::MatrixXd::Identity(prior.dim(), prior.dim());
  CHECK_THROWS(posterior_update(prior, obs, h));
}

TEST_CASE("scalar marginal likelihood equals the closed form") {
  HyperParams h;
  auto prior = prior_belief({"P1"}, h);
  prior.mean << 0.0, 0.0;
  prior.cov = Eigen::Matrix2d::Identity();  // prior var 1 + noise var 1 = 2
  LinearRow row;
  row.response = 1.0;
  row.noise_var = 1.0;
  row.coef = {{0, 1.0}};
  double got = log_marginal_likelihood_rows(prior, {row});
  double expect = -0.5 * std::log(4.0 * M_PI) - 0.25;
  CHECK(got == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("marginal likelihood matches the dense covariance oracle") {
  HyperParams h;
  Rng rng(15);
  for (int rep = 0; rep < 5; ++rep) {
    auto obs = random_observation_set(4, 25, rng);
    auto prior = prior_belief(obs.index.players(), h);
    double fast = log_marginal_likelihood(prior, obs, h);
    double dense = dense_lml_oracle(prior, obs, h);
    CHECK(fast == doctest::Approx(dense).epsilon(1e-10));
    CHECK(std::abs(fast - dense) < 1e-8 * std::max(1.0, std::abs(dense)));
  }
}

TEST_CASE("marginal likelihood is invariant to a joint prior-mean shift") {
  HyperParams h;
  Rng rng(16);
  auto obs = random_observation_set(5, 30, rng);
  double base = log_marginal_likelihood(h, obs);
  for (double c : {1.0, -3.5, 100.0}) {
    HyperParams shifted = h;
    shifted.mu_alpha += c;
    shifted.mu_beta += c;
    double moved = log_marginal_likelihood(shifted, obs);
    CHECK(std::abs(moved - base) < 1e-10 * std::max(1.0, std::abs(base)));
  }
}

TEST_CASE("joint prior-mean shift moves every posterior mean by the shift") {
  HyperParams h;
  Rng rng(17);
  auto obs = random_observation_set(6, 40, rng);
  auto post0 = posterior_update(prior_belief(obs.index.players(), h), obs, h);
  double c = 4.25;
  HyperParams hs = h;
  hs.mu_alpha += c;
  hs.mu_beta += c;
  auto post1 = posterior_update(prior_belief(obs.index.players(), hs), obs, hs);
  CHECK(((post1.mean - post0.mean).array() - c).abs().maxCoeff() < 1e-8);
  CHECK((post1.cov - post0.cov).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("likelihood surface derivatives agree between the two routes") {
  // Central finite differences of the fast evaluator against the dense
  // oracle, in every hyperparameter direction at the default values.
  HyperParams h;
  Rng rng(18);
  auto obs = random_observation_set(5, 20, rng);
  auto eval_fast = [&](const HyperParams& hp) {
    return log_marginal_likelihood(hp, obs);
  };
  auto eval_dense = [&](const HyperParams& hp) {
    auto prior = prior_belief(obs.index.players(), hp);
    return dense_lml_oracle(prior, obs, hp);
  };
  auto bump = [&](int which, double eps) {
    HyperParams hp = h;
    double* fields[6] = {&hp.mu_alpha, &hp.sigma_alpha, &hp.mu_beta,
                         &hp.sigma_beta, &hp.gamma, &hp.sigma};
    *fields[which] += eps;
    return hp;
  };
  for (int k = 0; k < 6; ++k) {
    double eps = 1e-4;
    double d_fast =
        (eval_fast(bump(k, eps)) - eval_fast(bump(k, -eps))) / (2 * eps);
    double d_dense =
        (eval_dense(bump(k, eps)) - eval_dense(bump(k, -eps))) / (2 * eps);
    CHECK(std::abs(d_fast - d_dense) <=
          1e-4 * std::max(1.0, std::abs(d_dense)));
  }
}

TEST_CASE("compile rejects rows referencing unindexed players") {
  HyperParams h;
  Rng rng(19);
  auto obs = random_observation_set(6, 10, rng);
  auto prior = prior_belief(player_pool(5), h);  // one player short
  CHECK_THROWS(posterior_update(prior, obs, h));
}
