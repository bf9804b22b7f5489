#pragma once

// Shared probability primitives, the grouped data model and the forward-model
// abstraction. Every probability is carried as a natural log.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsm {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // ln sqrt(2 pi)

/// Raised for invalid inputs (bad specs, empty data, singular configurations).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure cannot produce a usable answer.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using GroupId = std::int64_t;

struct DataPoint {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const DataPoint&) const = default;
};

/// One group of observations sharing a single latent parameter.
struct DataSet {
  GroupId id = 0;
  std::vector<DataPoint> points;

  DataSet() = default;
  DataSet(GroupId id, std::vector<DataPoint> points);

  std::size_t size() const { return points.size(); }
};

/// Sums that fully describe a group under the linear model y = theta * x.
struct LinearStats {
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  std::size_t n = 0;

  static LinearStats of(std::span<const DataPoint> points);
  LinearStats& operator+=(const LinearStats& o);
};

class GroupedData {
 public:
  GroupedData() = default;
  explicit GroupedData(std::vector<DataSet> datasets);

  const std::vector<DataSet>& datasets() const { return datasets_; }
  std::size_t group_count() const { return datasets_.size(); }
  std::size_t total_points() const;

  /// All points stacked in group order.
  std::vector<DataPoint> stacked() const;
  LinearStats pooled_stats() const;

  /// Same points, one group per point (ids 0..N-1 in stacked order).
  GroupedData split_per_point() const;
  /// All points in a single group with the given id.
  GroupedData merged(GroupId id = 0) const;

 private:
  std::vector<DataSet> datasets_;
};

struct GaussianSpec {
  double mean = 0.0;
  double std = 1.0;

  GaussianSpec() = default;
  GaussianSpec(double mean, double std);

  bool operator==(const GaussianSpec&) const = default;
};

struct UniformSpec {
  double lower = 0.0;
  double upper = 1.0;

  UniformSpec() = default;
  UniformSpec(double lower, double upper);

  double width() const { return upper - lower; }
  bool contains(double v) const { return v >= lower && v <= upper; }
  /// -inf outside the support.
  double log_density(double v) const;

  bool operator==(const UniformSpec&) const = default;
};

struct HyperParams {
  double mu_theta = 0.0;
  double sigma_theta = 1.0;

  HyperParams() = default;
  HyperParams(double mu_theta, double sigma_theta);

  GaussianSpec as_gaussian() const { return {mu_theta, sigma_theta}; }
};

struct NoiseParams {
  double sigma_y = 1.0;

  NoiseParams() = default;
  explicit NoiseParams(double sigma_y);
};

/// Deterministic map f(x, theta) -> predicted y.
class ForwardModel {
 public:
  virtual ~ForwardModel() = default;
  virtual double evaluate(double x, std::span<const double> theta) const = 0;
  virtual std::size_t theta_dim() const = 0;
  virtual std::string name() const = 0;
};

/// f(x, theta) = theta * x^power; power 1 is the linear model.
class MonomialModel final : public ForwardModel {
 public:
  explicit MonomialModel(int power = 1);
  double evaluate(double x, std::span<const double> theta) const override;
  std::size_t theta_dim() const override { return 1; }
  std::string name() const override;
  int power() const { return power_; }

 private:
  int power_;
};

/// Builds a model from its name() ("linear", "quadratic", "cubic").
std::shared_ptr<const ForwardModel> make_forward_model(const std::string& name);

/// ln N(y_j | f(x_j, theta), sigma_y^2) summed over the group.
double gaussian_log_likelihood(const ForwardModel& model, std::span<const DataPoint> points,
                               std::span<const double> theta, double sigma_y);

double gaussian_log_density(double z, const GaussianSpec& spec);
double kl_gaussian(const GaussianSpec& p, const GaussianSpec& q);
double log_sum_exp(std::span<const double> values);
/// ln(mean(exp(values))).
double log_mean_exp(std::span<const double> values);

/// Standard normal CDF.
double normal_cdf(double z);
/// ln(Phi(b) - Phi(a)) for a < b, accurate in both tails.
double log_normal_interval_mass(double a, double b);

}  // namespace hsm
