#pragma once

// Closed-form conditional posteriors, conditional evidences and robust
// prediction densities for the linear model y = theta * x under the four model
// classes:
//   M1a  uniform prior on theta, Gaussian noise (sigma_y)
//   M1b  Gaussian prior N(mu_theta, sigma_theta^2) on a shared theta
//   M2a  per-group theta_i ~ N(mu_theta, sigma_theta^2), no additive noise
//   M2b  per-group theta_i ~ N(mu_theta, sigma_theta^2) plus Gaussian noise
//
// Evidences are returned as natural logs; -inf encodes zero evidence.

#include <optional>

#include "hsm/core.hpp"

namespace hsm::linear {

struct ConditionalPosterior {
  double mu_tilde = 0.0;
  double sigma_tilde = 1.0;
};

enum class Truncation {
  kExact,        ///< multiply by the posterior mass inside the uniform prior
  kUntruncated,  ///< assume the Gaussian posterior lies entirely inside the prior
};

// M1a -----------------------------------------------------------------------

ConditionalPosterior posterior_theta_m1a(const LinearStats& s, const NoiseParams& noise);
ConditionalPosterior posterior_theta_m1a(const GroupedData& data, const NoiseParams& noise);

double log_cond_evidence_m1a(const LinearStats& s, const NoiseParams& noise,
                             const UniformSpec& theta_prior,
                             Truncation mode = Truncation::kExact);
double log_cond_evidence_m1a(const GroupedData& data, const NoiseParams& noise,
                             const UniformSpec& theta_prior,
                             Truncation mode = Truncation::kExact);

// M1b / M2b -----------------------------------------------------------------

ConditionalPosterior posterior_theta_m1b(const LinearStats& s, const HyperParams& psi,
                                         const NoiseParams& noise);
ConditionalPosterior posterior_theta_m1b(const GroupedData& data, const HyperParams& psi,
                                         const NoiseParams& noise);

/// ln p(D | mu_theta, sigma_theta, sigma_y); an empty data set has evidence 1.
double log_cond_evidence_m1b(const LinearStats& s, const HyperParams& psi,
                             const NoiseParams& noise);
double log_cond_evidence_m1b(const GroupedData& data, const HyperParams& psi,
                             const NoiseParams& noise);

ConditionalPosterior posterior_theta_m2b(const DataSet& group, const HyperParams& psi,
                                         const NoiseParams& noise);
double log_cond_evidence_m2b(const DataSet& group, const HyperParams& psi,
                             const NoiseParams& noise);

// M2a -----------------------------------------------------------------------

/// Relative spread allowed between the ratios y_j / x_j of one delta group.
inline constexpr double kDeltaRatioTolerance = 1e-9;

/// ln p(D_i | psi) for the zero-noise model. Throws if any x_j == 0; returns
/// -inf when the group's ratios y_j / x_j disagree.
double log_cond_evidence_m2a(const DataSet& group, const HyperParams& psi);
/// Single-point form used inside sampling loops (no allocation).
double log_cond_evidence_m2a_point(const DataPoint& p, const HyperParams& psi);

// Robust prediction ------------------------------------------------------------

/// Predictive density of (x_hat, y_hat) given a Gaussian posterior on theta and
/// noise sigma_y. Uses N(y_hat | x_hat mu, sigma_y^2 + x_hat^2 sigma_tilde^2),
/// which equals the 1/|x_hat| form and stays valid at x_hat = 0.
double robust_pred_density_m1_family(double x_hat, double y_hat, const ConditionalPosterior& cond,
                                     const NoiseParams& noise);

/// Predictive density for the hierarchical classes given hyperparameters:
/// the per-group evidence of the singleton {(x_hat, y_hat)}. Without noise
/// this is the delta (M2a) form and requires x_hat != 0.
double robust_pred_density_hs_family(double x_hat, double y_hat, const HyperParams& psi,
                                     std::optional<NoiseParams> noise);

}  // namespace hsm::linear
