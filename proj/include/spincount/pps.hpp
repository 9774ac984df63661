#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "spincount/function.hpp"

namespace spincount {

using Registry = std::map<std::string, PBFunction>;

struct PpsAtom {
  std::string name;
  std::vector<int> scope;  // 0-based variable indices; free variables come first

  friend bool operator==(const PpsAtom&, const PpsAtom&) = default;
};

/// f(x) = sum over the bound variables of the product of the atoms.
struct PpsFormula {
  int n_free = 0;
  int n_bound = 0;
  std::vector<PpsAtom> atoms;

  friend bool operator==(const PpsFormula&, const PpsFormula&) = default;
};

PBFunction eval_pps(const PpsFormula& psi, const Registry& registry);

/// `pps <n_free> <n_bound> ; <fname> v<i> ... ; ...` with 1-based variables.
std::string to_text(const PpsFormula& psi);
PpsFormula parse_pps(std::string_view text);

struct TraceStep {
  std::string name;
  PpsFormula formula;
  PBFunction value;
};

/// A named sequence of pps steps; each may refer to the base registry and earlier steps.
struct GadgetTrace {
  std::vector<TraceStep> steps;

  /// Evaluates the formula against base + earlier steps and appends the result.
  const PBFunction& add(const std::string& name, PpsFormula formula, const Registry& base);
  const PBFunction& value(const std::string& name) const;
  std::string to_text() const;
};

/// Re-evaluates every step; throws VerificationError on any mismatch.
void verify_trace(const GadgetTrace& trace, const Registry& base);

}  // namespace spincount
