#pragma once

// Weighted Monte-Carlo posterior approximation over hyperparameters, moment
// summaries, and a transitional MCMC sampler whose evidence is a by-product.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hsm/core.hpp"
#include "hsm/rng.hpp"

namespace hsm {

using Vector = std::vector<double>;
using PriorSampler = std::function<Vector(Rng&)>;
using LogDensityFn = std::function<double(std::span<const double>)>;

/// Independent uniform priors on each coordinate.
struct BoxPrior {
  std::vector<UniformSpec> dims;

  Vector sample(Rng& rng) const;
  double log_density(std::span<const double> v) const;
  PriorSampler sampler() const;
  LogDensityFn density() const;
};

/// Samples with normalized log-weights plus an evidence estimate.
struct WeightedSamples {
  std::vector<Vector> samples;
  std::vector<double> log_weights;  ///< sum(exp) == 1
  double log_evidence = 0.0;

  std::size_t size() const { return samples.size(); }
  double weight(std::size_t i) const;
  double effective_sample_size() const;
};

/// n prior draws; draw j uses the stream Rng(seed).derive(j).
std::vector<Vector> draw_prior_samples(const PriorSampler& prior_sampler, std::size_t n_samples,
                                       std::uint64_t seed);

/// Normalized weights proportional to the likelihoods (NaN counts as zero)
/// and the evidence estimate ln mean(exp(log_likelihoods)).
WeightedSamples weight_by_likelihood(std::vector<Vector> samples, std::vector<double> log_likelihoods);

/// Draws n prior samples and weights them by their likelihood.
WeightedSamples mcs_weighted_posterior(const PriorSampler& prior_sampler,
                                       const LogDensityFn& log_likelihood, std::size_t n_samples,
                                       std::uint64_t seed);

struct Moments {
  double mean = 0.0;
  double std = 0.0;
};

/// E and Std of g(sample) under the weights.
Moments weighted_moments(const WeightedSamples& ws,
                         const std::function<double(std::span<const double>)>& g);

/// Moments of the mixture sum_j w_j N(mu_j, sigma_j^2), where component(sample)
/// returns (mu_j, sigma_j).
Moments mixture_moments(
    const WeightedSamples& ws,
    const std::function<std::pair<double, double>(std::span<const double>)>& component);

struct TmcmcConfig {
  std::size_t population_size = 1000;
  double target_stage_cov = 1.0;
  double proposal_scale = 0.04;  ///< beta^2 multiplying the weighted sample covariance
  std::size_t max_stages = 100;
  std::uint64_t seed = 0;
  /// Metropolis steps applied to each resampled point per stage.
  std::size_t chain_length = 1;

  void validate() const;
};

struct TmcmcResult {
  std::vector<Vector> samples;          ///< equally weighted final-stage samples
  std::vector<double> log_likelihoods;  ///< aligned with samples
  double log_evidence = 0.0;
  std::size_t stage_count = 0;
  std::vector<double> exponents;  ///< tempering exponent reached at each stage
  std::vector<double> acceptance_rates;
  /// Kish ESS of the last stage's weights; resampled samples carry about this
  /// much independent information.
  double final_stage_ess = 0.0;

  WeightedSamples as_weighted() const;
};

TmcmcResult tmcmc_run(const LogDensityFn& log_prior, const PriorSampler& prior_sampler,
                      const LogDensityFn& log_likelihood, const TmcmcConfig& config);

}  // namespace hsm
