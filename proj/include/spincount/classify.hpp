#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spincount/function.hpp"
#include "spincount/properties.hpp"

namespace spincount {

/// Ordered key=value pairs explaining a verdict.
using Evidence = std::vector<std::pair<std::string, std::string>>;

enum class TwoSpinTag { FP_Trivial, BIS_Equivalent, FPRAS, NoFPRAS_unless_NP_eq_RP, Open };
enum class OpenKind { None, MonotoneAntiferromagnetic, SymmetricAntiferromagnetic };

struct TwoSpinVerdict {
  TwoSpinTag tag = TwoSpinTag::FP_Trivial;
  OpenKind open_kind = OpenKind::None;
  Evidence evidence;
};

TwoSpinVerdict classify_two_spin(const PBFunction& f);

enum class UpDownTag { FP, BIS_hard, NoFPRAS_unless_NP_eq_RP };

struct UpDownVerdict {
  UpDownTag tag = UpDownTag::FP;
  bool bis_easy_flag = false;
  Evidence evidence;
};

UpDownVerdict classify_with_updown(const std::vector<PBFunction>& F);

enum class RelTrichotomy { Affine_FP, IM2_BIS, SAT_equivalent };

RelTrichotomy classify_relations(const std::vector<SupportRelation>& gamma);

const char* to_string(TwoSpinTag t);
const char* to_string(OpenKind k);
const char* to_string(UpDownTag t);
const char* to_string(RelTrichotomy t);

}  // namespace spincount
