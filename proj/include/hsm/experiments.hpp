#pragma once

// Synthetic data, grouping schemes, model-class selection over the linear
// model classes, and the three studies built on them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsm/core.hpp"
#include "hsm/samplers.hpp"

namespace hsm::exp {

// Data ------------------------------------------------------------------------

enum class ErrorType { kAdditive, kEmbedded, kMixed, kNone };

const char* to_string(ErrorType e);
ErrorType error_type_from_string(const std::string& s);

struct SyntheticSpec {
  std::string function = "linear";  ///< linear | quadratic | cubic
  ErrorType error_type = ErrorType::kAdditive;
  double theta_hat = 1.0;
  double sigma_theta_hat = 0.0;
  double sigma_y_hat = 0.0;
  UniformSpec x_range{0.0, 1.0};
  std::size_t n_points = 1000;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument; a nonzero sigma the error type ignores is an error.
  void validate() const;
};

/// x ~ U(x_range); additive: y = f(x, theta) + e_y; embedded: y = f(x, theta + e_theta); mixed: both.
DataSet generate_data(const SyntheticSpec& spec, GroupId id = 0);

struct GroupedSpec {
  double mu_theta = 1.0;
  double sigma_theta = 0.5;
  double sigma_y = 0.1;
  std::size_t n_groups = 5;
  std::size_t points_per_group = 11;
  UniformSpec x_range{0.0, 1.0};
  std::uint64_t seed = 0;

  void validate() const;
};

struct GroupedFixture {
  GroupedData data;
  std::vector<double> group_theta;  ///< realized theta_i per group
};

/// theta_i ~ N(mu, sigma_theta^2); each group uses the same midpoint x grid
/// x_j = lo + (j + 1/2) (hi - lo) / n, so x values repeat across groups.
GroupedFixture generate_grouped_data(const GroupedSpec& spec);

// Groupings -------------------------------------------------------------------

enum class GroupingKind { kActual, kConstantX, kHalfError, kQuarterError, kSinglePoint, kRandom };

const char* to_string(GroupingKind k);
GroupingKind grouping_kind_from_string(const std::string& s);

struct GroupingScheme {
  GroupingKind kind = GroupingKind::kActual;
  std::uint64_t seed = 0;      ///< random only
  std::size_t random_groups = 5;
};

struct GroupingResult {
  GroupedData data;  ///< group ids renumbered 0..G-1
  std::size_t dropped_empty = 0;
};

/// Regroups the points of `data`, whose groups are taken as the actual ones.
GroupingResult apply_grouping(const GroupedData& data, const GroupingScheme& scheme);

// Model classes ---------------------------------------------------------------

enum class ModelClass { kM1a, kM1b, kM2a, kM2b };

const char* to_string(ModelClass m);
ModelClass model_class_from_string(const std::string& s);

/// One candidate. M1 classes pool all points; M2 classes give each group of
/// the data its own theta_i.
struct ModelClassSpec {
  ModelClass kind = ModelClass::kM1a;
  std::string label;  ///< report name; to_string(kind) when empty
  UniformSpec theta_prior{-1.0, 3.0};
  UniformSpec mu_theta_prior{-1.0, 3.0};
  UniformSpec sigma_theta_prior{0.001, 1.0};
  UniformSpec sigma_y_prior{0.001, 1.0};

  std::string name() const { return label.empty() ? to_string(kind) : label; }
  bool has_noise() const { return kind != ModelClass::kM2a; }
  /// Box over the hyperparameter vector: M1a (sigma_y); M1b, M2b (mu, sigma_theta,
  /// sigma_y); M2a (mu, sigma_theta).
  BoxPrior hyper_prior() const;
};

std::vector<ModelClassSpec> default_candidates();

struct SelectionSettings {
  std::size_t mcs_samples = 10000;
  std::uint64_t seed = 0;
};

struct SelectionRow {
  std::string model;
  double e_theta = 0.0;
  double std_theta = 0.0;
  double e_sigma_y = 0.0;
  double std_sigma_y = 0.0;
  double ln_evidence = 0.0;
  double post_prob = 0.0;
};

struct ModelFit {
  ModelClassSpec spec;
  WeightedSamples posterior;
  SelectionRow row;  ///< post_prob left at 0
};

/// ln p(D | hyper vector, M) for one hyperparameter sample.
double model_log_likelihood(const ModelClassSpec& spec, const GroupedData& data, std::span<const double> v);

/// Predictive component for a new point at x: (mean, sd) of theta for the
/// sample, before multiplying by x. M1 classes use the conditional posterior,
/// M2 classes the population N(mu, sigma_theta^2).
std::pair<double, double> theta_component(const ModelClassSpec& spec, const LinearStats& pooled,
                                          std::span<const double> v);
/// sigma_y of a hyperparameter sample (0 for M2a).
double sample_sigma_y(const ModelClassSpec& spec, std::span<const double> v);

ModelFit fit_model_class(const GroupedData& data, const ModelClassSpec& spec, const SelectionSettings& settings);

struct SelectionReport {
  std::vector<SelectionRow> rows;
  std::vector<std::string> failures;  ///< candidates excluded after a sampler error
  bool flagged() const { return !failures.empty(); }
  const SelectionRow& row(const std::string& model) const;
  const SelectionRow& best() const;
};

/// Candidate i uses seed mix_seed(settings.seed, i). With `fits` non-null the
/// surviving fits are returned in row order.
SelectionReport run_model_selection(const GroupedData& data, const std::vector<ModelClassSpec>& candidates,
                                    const SelectionSettings& settings, std::vector<ModelFit>* fits = nullptr);

/// Equal-prior probabilities from log evidences.
std::vector<double> posterior_model_probabilities(const std::vector<double>& ln_evidence);

// Prediction grid -------------------------------------------------------------

struct PredictionGridSpec {
  std::size_t nx = 101;
  std::size_t ny = 201;
  /// Components below this fraction of the largest weight are skipped.
  double weight_cutoff = 1e-12;
};

struct PredictionGrid {
  std::string model;
  std::vector<double> x;
  std::vector<double> y;
  /// density[i][k]: y-bin average of p(y | x_i, D, M) around y_k.
  std::vector<std::vector<double>> density;
  std::vector<double> mean;
  std::vector<double> lower;  ///< 5% quantile
  std::vector<double> upper;  ///< 95% quantile

  /// Trapezoid integral of column i over y.
  double column_mass(std::size_t i) const;
};

/// Grid over x_range x [min y - 3 s, max y + 3 s], s the sample std of y.
PredictionGrid predict_grid(const ModelFit& fit, const GroupedData& data, const UniformSpec& x_range,
                            const PredictionGridSpec& spec = {});

// Studies ---------------------------------------------------------------------

struct Table1Case {
  std::string label;  ///< D1, D2a, D2b
  SyntheticSpec spec;
  SelectionReport report;
};

/// The three error types at n points on x_range, each fitted by M1a, M1b, M2a, M2b.
std::vector<Table1Case> run_error_type_study(const UniformSpec& x_range, std::uint64_t seed,
                                             const SelectionSettings& settings, std::size_t n_points = 1000);

struct GroupingStudy {
  GroupedFixture fixture;
  std::vector<std::string> labels;  ///< M'1 .. M'6
  std::vector<GroupedData> groupings;
  SelectionReport report;
};

/// 5 groups x 11 points from (1, 0.5, 0.1); six groupings scored as M2b.
GroupingStudy run_grouping_study(std::uint64_t seed, const SelectionSettings& settings);

struct ReducedOrderCase {
  std::string function;  ///< quadratic | cubic
  std::size_t size = 0;
  bool noise = false;
  GroupedData data;
  SelectionReport report;
  std::vector<PredictionGrid> grids;  ///< one per model when requested
};

struct ReducedOrderSettings {
  std::vector<std::size_t> sizes{20, 50, 100, 200};
  std::vector<std::string> functions{"quadratic", "cubic"};
  double sigma_y = 0.1;
  /// Sizes that also get prediction grids.
  std::vector<std::size_t> grid_sizes{100};
  PredictionGridSpec grid;
};

/// Linear fits (M1a, M2a, M2b) to polynomial data on [-1, 1].
std::vector<ReducedOrderCase> run_reduced_order_study(bool noise, std::uint64_t seed,
                                                      const SelectionSettings& settings,
                                                      const ReducedOrderSettings& ro = {});

}  // namespace hsm::exp
