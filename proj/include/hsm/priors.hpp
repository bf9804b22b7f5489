#pragma once

#include <variant>

#include "hsm/core.hpp"

namespace hsm {

/// One-dimensional prior used as a proposal prior p(theta | M_i) or as a
/// density on sigma_y. Closed set: the studies only use these two families.
class PriorSpec {
 public:
  PriorSpec(UniformSpec u) : spec_(u) {}  // NOLINT(google-explicit-constructor)
  PriorSpec(GaussianSpec g) : spec_(g) {}  // NOLINT(google-explicit-constructor)

  double log_density(double v) const;
  bool is_uniform() const { return std::holds_alternative<UniformSpec>(spec_); }
  const UniformSpec& uniform() const { return std::get<UniformSpec>(spec_); }
  const GaussianSpec& gaussian() const { return std::get<GaussianSpec>(spec_); }

  bool operator==(const PriorSpec&) const = default;

 private:
  std::variant<UniformSpec, GaussianSpec> spec_;
};

}  // namespace hsm
