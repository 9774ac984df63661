#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spincount/pps.hpp"
#include "spincount/properties.hpp"

namespace spincount {

/// Result of a construction together with the pps steps that realise it.
struct Gadget {
  PBFunction value;
  GadgetTrace trace;
  std::string result;  // name of the final step, or of a base function
};

/// Mode 1: f(x,y)f(y,x). Mode 2: sum_z f(x,z)f(y,z). Mode 3: sum_z f(x,z)f(y,z)up(z).
/// Base names in the trace are "f" and "up".
Gadget symmetrize(const PBFunction& f, int mode, const std::optional<PBFunction>& up = std::nullopt);

struct UpDown {
  PBFunction up;
  PBFunction down;
  GadgetTrace trace;  // base name "f"; steps "up" and "down"
};

UpDown make_up_down(const PBFunction& f);

/// Binary nontrivial non-lsm function built from non-lsm f and binary nontrivial g.
/// Base names are "f", "g", "delta0" and "delta1".
Gadget extract_nonlsm_binary(const PBFunction& f, const PBFunction& g);

struct ApproxPin {
  PBFunction value;
  unsigned long k = 0;
};

/// Least k >= 1 with the off-pin entry of u^k at most epsilon.
ApproxPin approx_pin(const PBFunction& u, const Rational& epsilon);

enum class Direction { Up, Down };

struct NormalizedUnary {
  PBFunction value;
  Rational scale;
};

NormalizedUnary normalize_unary(const PBFunction& u, Direction direction);

bool is_strictly_increasing_permissive(const PBFunction& u);
bool is_strictly_decreasing_permissive(const PBFunction& u);

enum class PinningTag { AllPure, MonotoneFamily, FlippedMonotoneFamily, BothUnaries };
const char* to_string(PinningTag tag);

struct PinningVerdict {
  PinningTag tag = PinningTag::AllPure;
  // BothUnaries only. The trace uses base names f1..fn, delta0, delta1.
  std::optional<PBFunction> up;
  std::optional<PBFunction> down;
  GadgetTrace trace;
  // MonotoneFamily / FlippedMonotoneFamily: index of the function whose
  // (flipped) bit-flip is not monotone on its support.
  int witness = -1;
};

PinningVerdict pinning_analysis(const std::vector<PBFunction>& F);

/// Registry f1..fn, delta0, delta1 used by pinning traces.
Registry pinning_registry(const std::vector<PBFunction>& F);

}  // namespace spincount
