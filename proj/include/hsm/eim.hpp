#pragma once

// Empirical interpolation of a group likelihood across the noise level:
//   p(D_i | theta, sigma_y) ~= sum_l alpha_l(sigma_y) g_l(theta),
//   g_l(theta) = p(D_i | theta, sigma_y_l),
// with alpha fixed by exactness at one anchor theta per basis. The
// interpolant turns the common-noise hierarchical likelihood (HS3) into a sum
// of per-basis importance-sampling estimates.
//
// All likelihood values are handled as logs. The linear solve works on the
// matrix rescaled by per-column maxima.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hsm/core.hpp"
#include "hsm/group_inference.hpp"
#include "hsm/hsm_is.hpp"

namespace hsm::eim {

/// ln p(D | theta, sigma) for Gaussian noise, from the residual sum of
/// squares S(theta) and the point count.
double log_likelihood_from_sse(double sse, std::size_t n_points, double sigma_y);

/// Residual sum of squares of a group under a scalar forward model.
class GroupResidual {
 public:
  GroupResidual(DataSet group, std::shared_ptr<const ForwardModel> model);

  double sse(double theta) const;
  double log_likelihood(double theta, double sigma_y) const;
  const DataSet& group() const { return group_; }
  const ForwardModel& model() const { return *model_; }
  std::size_t n_points() const { return group_.size(); }

 private:
  DataSet group_;
  std::shared_ptr<const ForwardModel> model_;
};

struct EimBasis {
  double sigma_y = 0.0;
  double theta_anchor = 0.0;
  double anchor_sse = 0.0;  ///< S(theta_anchor)
  /// Posterior samples of theta at sigma_y with ln p(D_i | sigma_y, M_i).
  DatasetInference archive;

  const std::vector<double>& posterior_samples() const { return archive.theta_samples(); }
  double log_evidence() const { return archive.log_evidence(); }
};

struct EimCoefficients {
  std::vector<double> alpha_hat;  ///< solution of the scaled system
  double log_c_p = 0.0;           ///< ln max_n P_n
  std::vector<double> log_c_g;    ///< ln max_n g_{n l} per column

  /// alpha_l = (c_P / c_g_l) alpha_hat_l; may overflow for extreme scales.
  std::vector<double> alpha() const;
};

struct EimModel {
  GroupId group_id = 0;
  std::size_t n_points = 0;
  UniformSpec theta_prior;
  std::vector<EimBasis> bases;
  /// ln g_{n l} = ln p(D_i | theta_n, sigma_y_l); row n = anchor n, column l = basis l.
  std::vector<std::vector<double>> log_g;
  std::vector<double> training_theta;  ///< Theta_i
  std::vector<double> sigma_grid;      ///< Sigma_y
  double epsilon_lim = 0.0;
  double achieved_error = INFINITY;
  bool converged = false;
  std::vector<double> error_trace;  ///< max normalized error before each greedy addition

  std::size_t size() const { return bases.size(); }
  /// ln P_n(sigma) at every anchor.
  std::vector<double> anchor_log_likelihoods(double sigma_y) const;
  /// Rebuilds log_g from the bases (anchors x noise levels).
  void rebuild_matrix();
};

/// Reciprocal condition estimate below which the scaled matrix counts as singular.
inline constexpr double kDegenerateRcond = 1e-14;
/// Normalized error at or below this counts as exact interpolation.
inline constexpr double kExactTolerance = 1e-12;

EimCoefficients solve_coefficients(const EimModel& model, const NoiseParams& noise);

/// ln of sum_l alpha_l g_l(theta), given ln g_l(theta) for each basis. Returns
/// nullopt when the interpolant is not positive.
std::optional<double> log_interpolant(const EimCoefficients& c, std::span<const double> log_g_theta);

/// |p(D | theta, sigma) - sum_l alpha_l g_l(theta)| in linear scale.
double eim_error(const EimModel& model, const GroupResidual& lik, double theta, const NoiseParams& noise);

struct SigmaGridSpec {
  double lower = 0.01;
  double upper = 1.0;
  std::size_t points = 128;  ///< log-uniform
  std::vector<double> build() const;
};

struct EimTrainingConfig {
  SigmaGridSpec sigma_grid;
  std::size_t sparse_theta_points = 51;  ///< uniform over the theta prior
  std::size_t initial_bases = 2;         ///< K
  std::size_t samples_per_basis = 500;
  double epsilon_lim = 1e-5;  ///< relative to the per-sigma maximum over Theta
  std::size_t max_bases = 60;
  double sample_spacing = 1e-3;  ///< delta: relative sigma gap required to add samples
  std::uint64_t seed = 0;

  void validate() const;
};

/// Normalized error over Theta x Sigma: |p - interp| / max_Theta p per sigma.
struct ErrorScan {
  double max_error = 0.0;
  std::size_t theta_index = 0;
  std::size_t sigma_index = 0;
};

/// Bookkeeping shared by initial construction and greedy training.
class EimTrainer {
 public:
  EimTrainer(GroupResidual likelihood, const GroupPosteriorSampler& sampler, EimTrainingConfig config);

  /// Initial sets: K bases from the extreme noise levels, largest sigma first.
  void construct_initial_sets();
  /// Greedy loop until the normalized error reaches epsilon_lim or max_bases.
  void greedy_train();

  ErrorScan scan() const;
  const EimModel& model() const { return model_; }
  EimModel take_model() { return std::move(model_); }
  const GroupResidual& likelihood() const { return lik_; }
  std::size_t greedy_iterations() const { return greedy_iterations_; }

 private:
  ErrorScan scan_over(const std::vector<double>& sigmas) const;
  void add_basis(double sigma, std::size_t theta_index);
  void append_theta(const std::vector<double>& thetas);

  GroupResidual lik_;
  const GroupPosteriorSampler& sampler_;
  EimTrainingConfig config_;
  EimModel model_;
  std::vector<double> theta_sse_;  ///< S(theta) for every training theta
  std::size_t greedy_iterations_ = 0;
};

/// Convenience wrappers matching the two training phases.
EimTrainer construct_initial_sets(const DataSet& group, std::shared_ptr<const ForwardModel> model,
                                  const GroupPosteriorSampler& sampler, const EimTrainingConfig& config);
EimModel greedy_train(EimTrainer& trainer);
/// Both phases.
EimModel train_eim(const DataSet& group, std::shared_ptr<const ForwardModel> model,
                   const GroupPosteriorSampler& sampler, const EimTrainingConfig& config);

struct Hs3Diagnostics {
  std::size_t evaluations = 0;
  std::size_t floored = 0;  ///< group terms whose interpolant was not positive
  double flooring_rate() const {
    return evaluations ? static_cast<double>(floored) / static_cast<double>(evaluations) : 0.0;
  }
};

/// ln p(D_i | psi, sigma_y) for one group via the interpolant.
double hs3_group_log_likelihood(const EimModel& model, const HyperParams& psi, const NoiseParams& noise,
                                Hs3Diagnostics* diag = nullptr);
/// Sum over groups; a floored group gives -inf.
double hs3_log_likelihood(const std::vector<EimModel>& models, const HyperParams& psi,
                          const NoiseParams& noise, Hs3Diagnostics* diag = nullptr);

}  // namespace hsm::eim
