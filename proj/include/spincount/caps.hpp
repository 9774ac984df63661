#pragma once

namespace spincount {

/// Size limits for exhaustive evaluators.
struct Caps {
  int z_exact_vars = 24;
  int near_assignment_vars = 12;
  int matching_exact_vertices = 30;
};

/// Defaults, with SPINCOUNT_BRUTE_CAP (if set) overriding both brute-force variable caps.
Caps default_caps();

}  // namespace spincount
