#pragma once

// Hierarchical likelihood p(D | psi) assembled from independent per-group
// inferences by importance sampling. The group posterior samples drawn under a
// fixed proposal prior p(theta_i | M_i) are reweighted by p(theta_i | psi).

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hsm/core.hpp"
#include "hsm/group_inference.hpp"
#include "hsm/priors.hpp"

namespace hsm {

enum class HsVariant { kHs1, kHs2 };

const char* to_string(HsVariant v);
HsVariant hs_variant_from_string(const std::string& s);

/// Archive of one classical per-group inference.
class DatasetInference {
 public:
  DatasetInference(GroupId group_id, std::vector<double> theta_samples, double log_evidence,
                   PriorSpec theta_prior, std::vector<double> sigma_samples = {},
                   std::optional<PriorSpec> sigma_prior = std::nullopt);

  /// Convenience: run a sampler on the group and archive the result.
  static DatasetInference infer(const GroupPosteriorSampler& sampler, const DataSet& group,
                                HsVariant variant, std::size_t n_samples, std::uint64_t seed,
                                const UniformSpec& sigma_prior, double fixed_sigma_y = 0.0);

  GroupId group_id() const { return group_id_; }
  const std::vector<double>& theta_samples() const { return theta_; }
  const std::vector<double>& sigma_samples() const { return sigma_; }
  double log_evidence() const { return log_evidence_; }
  const PriorSpec& theta_prior() const { return theta_prior_; }
  const std::optional<PriorSpec>& sigma_prior() const { return sigma_prior_; }
  bool has_sigma() const { return !sigma_.empty(); }
  std::size_t size() const { return theta_.size(); }

  /// ln p(theta_j | M_i) and ln p(sigma_j | M_i), cached at construction.
  const std::vector<double>& log_theta_proposal() const { return log_theta_prop_; }
  const std::vector<double>& log_sigma_proposal() const { return log_sigma_prop_; }

 private:
  GroupId group_id_;
  std::vector<double> theta_;
  std::vector<double> sigma_;
  double log_evidence_;
  PriorSpec theta_prior_;
  std::optional<PriorSpec> sigma_prior_;
  std::vector<double> log_theta_prop_;
  std::vector<double> log_sigma_prop_;
};

/// ln p(D_i | M_i) + ln mean_j [p(theta_j | psi) / p(theta_j | M_i)].
double is_group_log_evidence_hs1(const DatasetInference& inf, const HyperParams& psi);

/// HS1 with the extra factor p(sigma_j | M_HS2) / p(sigma_j | M_i) per sample.
double is_group_log_evidence_hs2(const DatasetInference& inf, const HyperParams& psi,
                                 const PriorSpec& hyper_sigma_prior);

/// Kish effective sample size of the normalized importance ratios.
double is_effective_sample_size(const DatasetInference& inf, const HyperParams& psi,
                                const std::optional<PriorSpec>& hyper_sigma_prior = std::nullopt);

class HsmLikelihoodEstimator {
 public:
  HsmLikelihoodEstimator(std::vector<DatasetInference> inferences, HsVariant variant,
                         std::optional<PriorSpec> hyper_sigma_prior = std::nullopt);

  const std::vector<DatasetInference>& inferences() const { return inferences_; }
  HsVariant variant() const { return variant_; }
  const std::optional<PriorSpec>& hyper_sigma_prior() const { return hyper_sigma_prior_; }

  double group_log_evidence(std::size_t index, const HyperParams& psi) const;
  /// Sum of the per-group log estimates.
  double log_likelihood(const HyperParams& psi) const;

 private:
  std::vector<DatasetInference> inferences_;
  HsVariant variant_;
  std::optional<PriorSpec> hyper_sigma_prior_;
};

double hsm_log_likelihood(const HsmLikelihoodEstimator& est, const HyperParams& psi);
/// Raw form for samplers: sigma_theta <= 0 gives -inf instead of throwing.
double hsm_log_likelihood(const HsmLikelihoodEstimator& est, double mu_theta, double sigma_theta);

/// Distribution over psi used to score proposal priors.
struct HyperPriorBox {
  UniformSpec mu_theta;
  UniformSpec sigma_theta;
};
using HyperPrior = std::variant<HyperParams, HyperPriorBox>;

/// KL(N(mu, sigma^2) || candidate). For a uniform candidate the integral runs
/// over the candidate support only, so the value stays finite when the
/// Gaussian leaks past the bounds.
double kl_to_candidate(const GaussianSpec& p, const PriorSpec& candidate);

/// Monte-Carlo estimate of the psi-averaged KL divergence from p(theta | psi)
/// to the candidate proposal prior.
double proposal_objective(const PriorSpec& candidate, const HyperPrior& hyper_prior,
                          std::size_t n_mc, std::uint64_t seed);

}  // namespace hsm
