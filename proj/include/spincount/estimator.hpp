#pragma once

#include <cstdint>

#include "spincount/matching.hpp"

namespace spincount {

struct EstimatorConfig {
  Rational epsilon{1, 10};
  Rational delta{1, 4};
  std::uint64_t seed = 1;
  // Components of at most this many vertices are counted exactly.
  int exact_cap = 30;
  // Minimum chain steps per level: steps_constant * n^4 * ln(1/epsilon), clamped
  // to [min_steps, max_steps]. Sampling then continues until the batch-means
  // error of the level ratio is small enough, up to max_steps.
  double steps_constant = 0.05;
  std::uint64_t min_steps = 200000;
  std::uint64_t max_steps = 4000000;
};

/// Checks epsilon > 0 and 0 < delta < 1.
void validate(const EstimatorConfig& cfg);

struct EstimateReport {
  Rational value;
  bool exact = true;      // no sampling was needed
  int levels = 0;         // sampled self-reduction levels
  std::uint64_t steps = 0;
};

/// Randomized estimate of the number of perfect matchings of an integer-weighted
/// multigraph (weight m = m parallel edges). Deterministic for a fixed seed.
EstimateReport estimate_pm_report(const WeightedMultigraph& g, const EstimatorConfig& cfg);
Rational estimate_pm(const WeightedMultigraph& g, const EstimatorConfig& cfg);

/// Estimate of Z for an instance over one binary function whose Fourier table is nonnegative.
EstimateReport estimate_z_fpras_report(const PBFunction& f, const CspInstance& inst, const EstimatorConfig& cfg);
Rational estimate_z_fpras(const PBFunction& f, const CspInstance& inst, const EstimatorConfig& cfg);

}  // namespace spincount
