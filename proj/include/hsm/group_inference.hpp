#pragma once

// Classical per-group Bayesian inference: posterior samples of theta_i (and
// optionally sigma_y,i) under a fixed proposal prior, together with the group
// evidence. These archives feed the importance-sampling and EIM estimators.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hsm/core.hpp"
#include "hsm/priors.hpp"
#include "hsm/samplers.hpp"

namespace hsm {

struct GroupPosterior {
  std::vector<double> theta;
  std::vector<double> sigma;  ///< empty when sigma_y was held fixed
  double log_evidence = 0.0;
};

class GroupPosteriorSampler {
 public:
  virtual ~GroupPosteriorSampler() = default;

  /// theta ~ p(theta | D_i, sigma_y, M_i), evidence p(D_i | sigma_y, M_i).
  virtual GroupPosterior sample_fixed_sigma(const DataSet& group, double sigma_y, std::size_t n,
                                            std::uint64_t seed) const = 0;
  /// (theta, sigma_y) ~ p(theta, sigma_y | D_i, M_i), evidence p(D_i | M_i).
  virtual GroupPosterior sample_joint(const DataSet& group, const UniformSpec& sigma_prior,
                                      std::size_t n, std::uint64_t seed) const = 0;

  virtual const UniformSpec& theta_prior() const = 0;
  virtual const ForwardModel& model() const = 0;
};

/// Exact sampler for the linear model with a uniform theta prior: truncated
/// Gaussian draws for theta and a fine-grid inverse CDF for sigma_y.
class ConjugateLinearSampler final : public GroupPosteriorSampler {
 public:
  explicit ConjugateLinearSampler(UniformSpec theta_prior, std::size_t sigma_grid_points = 20001);

  GroupPosterior sample_fixed_sigma(const DataSet& group, double sigma_y, std::size_t n,
                                    std::uint64_t seed) const override;
  GroupPosterior sample_joint(const DataSet& group, const UniformSpec& sigma_prior, std::size_t n,
                              std::uint64_t seed) const override;
  const UniformSpec& theta_prior() const override { return theta_prior_; }
  const ForwardModel& model() const override { return model_; }

 private:
  UniformSpec theta_prior_;
  std::size_t grid_points_;
  MonomialModel model_{1};
};

/// Generic sampler for any scalar-parameter forward model, driven by TMCMC.
/// The population size is replaced by the requested sample count.
class TmcmcGroupSampler final : public GroupPosteriorSampler {
 public:
  TmcmcGroupSampler(std::shared_ptr<const ForwardModel> model, UniformSpec theta_prior,
                    TmcmcConfig config = {});

  GroupPosterior sample_fixed_sigma(const DataSet& group, double sigma_y, std::size_t n,
                                    std::uint64_t seed) const override;
  GroupPosterior sample_joint(const DataSet& group, const UniformSpec& sigma_prior, std::size_t n,
                              std::uint64_t seed) const override;
  const UniformSpec& theta_prior() const override { return theta_prior_; }
  const ForwardModel& model() const override { return *model_; }

 private:
  std::shared_ptr<const ForwardModel> model_;
  UniformSpec theta_prior_;
  TmcmcConfig config_;
};

/// Draws n values from N(mu, sigma^2) truncated to [lower, upper].
std::vector<double> sample_truncated_normal(double mu, double sigma, const UniformSpec& bounds,
                                            std::size_t n, Rng& rng);

}  // namespace hsm
