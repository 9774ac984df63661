#include "spincount/classify.hpp"

#include <algorithm>

#include "spincount/clone_ops.hpp"
#include "spincount/error.hpp"
#include "spincount/fourier.hpp"

namespace spincount {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

TwoSpinVerdict classify_two_spin(const PBFunction& f) {
  if (f.arity() != 2) throw ArityError("classify_two_spin needs a binary function");
  TwoSpinVerdict v;
  const SignedTable h = fourier(f);
  const Rational& f01 = h[1];
  const Rational& f10 = h[2];
  v.evidence.emplace_back("f01", to_string(f01));
  v.evidence.emplace_back("f10", to_string(f10));

  const bool trivial = is_trivial_binary(f);
  v.evidence.emplace_back("trivial", yes_no(trivial));
  if (trivial) {
    v.tag = TwoSpinTag::FP_Trivial;
    return v;
  }
  const bool lsm = is_lsm(f);
  v.evidence.emplace_back("lsm", yes_no(lsm));
  if (lsm) {
    if (f01 * f10 < 0) {
      v.tag = TwoSpinTag::BIS_Equivalent;
      return v;
    }
    if (f01 <= 0 && f10 <= 0 && !fourier(bit_flip(f)).is_nonnegative()) {
      throw VerificationError("lsm binary with nonpositive middle coefficients has a negative flipped transform");
    }
    if (f01 >= 0 && f10 >= 0 && !h.is_nonnegative()) {
      throw VerificationError("lsm binary with nonnegative middle coefficients has a negative transform");
    }
    v.tag = TwoSpinTag::FPRAS;
    return v;
  }
  const bool mono = is_monotone(f);
  const bool flip_mono = is_monotone(bit_flip(f));
  v.evidence.emplace_back("monotone", yes_no(mono));
  v.evidence.emplace_back("flip_monotone", yes_no(flip_mono));
  if (!mono && !flip_mono) {
    v.tag = TwoSpinTag::NoFPRAS_unless_NP_eq_RP;
    return v;
  }
  v.tag = TwoSpinTag::Open;
  v.open_kind = is_symmetric(f) ? OpenKind::SymmetricAntiferromagnetic : OpenKind::MonotoneAntiferromagnetic;
  return v;
}

UpDownVerdict classify_with_updown(const std::vector<PBFunction>& F) {
  UpDownVerdict v;
  const bool all_product = std::all_of(F.begin(), F.end(), [](const PBFunction& f) {
    return is_product_type(f).has_value();
  });
  v.evidence.emplace_back("all_product_type", yes_no(all_product));
  int max_arity = 0;
  for (const auto& f : F) max_arity = std::max(max_arity, f.arity());
  v.evidence.emplace_back("max_arity", std::to_string(max_arity));
  if (all_product) {
    v.tag = UpDownTag::FP;
    return v;
  }
  const bool all_lsm = std::all_of(F.begin(), F.end(), [](const PBFunction& f) { return is_lsm(f); });
  v.evidence.emplace_back("all_lsm", yes_no(all_lsm));
  if (all_lsm) {
    v.tag = UpDownTag::BIS_hard;
    v.bis_easy_flag = max_arity <= 2;
    return v;
  }
  v.tag = UpDownTag::NoFPRAS_unless_NP_eq_RP;
  return v;
}

RelTrichotomy classify_relations(const std::vector<SupportRelation>& gamma) {
  bool all_affine = true;
  bool all_im2 = true;
  for (const auto& r : gamma) {
    const RelClass c = relation_class(r);
    if (c != RelClass::Affine) all_affine = false;
    if (c == RelClass::Neither) {
      all_im2 = false;
    } else if (c == RelClass::Affine) {
      // Affine relations may still fail the lattice closure.
      for (auto a : r.tuples) {
        for (auto b : r.tuples) {
          if (!r.contains(a & b) || !r.contains(a | b)) all_im2 = false;
        }
      }
    }
  }
  if (all_affine) return RelTrichotomy::Affine_FP;
  if (all_im2) return RelTrichotomy::IM2_BIS;
  return RelTrichotomy::SAT_equivalent;
}

const char* to_string(TwoSpinTag t) {
  switch (t) {
    case TwoSpinTag::FP_Trivial:
      return "FP_Trivial";
    case TwoSpinTag::BIS_Equivalent:
      return "BIS_Equivalent";
    case TwoSpinTag::FPRAS:
      return "FPRAS";
    case TwoSpinTag::NoFPRAS_unless_NP_eq_RP:
      return "NoFPRAS_unless_NP_eq_RP";
    case TwoSpinTag::Open:
      return "Open";
  }
  return "?";
}

const char* to_string(OpenKind k) {
  switch (k) {
    case OpenKind::None:
      return "none";
    case OpenKind::MonotoneAntiferromagnetic:
      return "monotone_antiferromagnetic";
    case OpenKind::SymmetricAntiferromagnetic:
      return "symmetric_antiferromagnetic";
  }
  return "?";
}

const char* to_string(UpDownTag t) {
  switch (t) {
    case UpDownTag::FP:
      return "FP";
    case UpDownTag::BIS_hard:
      return "BIS_hard";
    case UpDownTag::NoFPRAS_unless_NP_eq_RP:
      return "NoFPRAS_unless_NP_eq_RP";
  }
  return "?";
}

const char* to_string(RelTrichotomy t) {
  switch (t) {
    case RelTrichotomy::Affine_FP:
      return "Affine_FP";
    case RelTrichotomy::IM2_BIS:
      return "IM2_BIS";
    case RelTrichotomy::SAT_equivalent:
      return "SAT_equivalent";
  }
  return "?";
}

}  // namespace spincount
