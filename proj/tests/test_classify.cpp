#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spincount/classify.hpp"
#include "spincount/clone_ops.hpp"
#include "spincount/error.hpp"

using namespace spincount;

namespace {

PBFunction bin(int a, int b, int c, int d) { return fn::binary(a, b, c, d); }

}  // namespace

TEST(TwoSpin, SpecExamples) {
  EXPECT_EQ(classify_two_spin(fn::neq()).tag, TwoSpinTag::FP_Trivial);
  EXPECT_EQ(classify_two_spin(bin(1, 1, 0, 1)).tag, TwoSpinTag::BIS_Equivalent);
  EXPECT_EQ(classify_two_spin(bin(2, 1, 1, 2)).tag, TwoSpinTag::FPRAS);
  EXPECT_EQ(classify_two_spin(bin(1, 2, 2, 1)).tag, TwoSpinTag::NoFPRAS_unless_NP_eq_RP);
  EXPECT_EQ(classify_two_spin(bin(1, 2, 2, 3)).tag, TwoSpinTag::Open);
  EXPECT_EQ(classify_two_spin(bin(3, 4, 1, 2)).tag, TwoSpinTag::BIS_Equivalent);
}

TEST(TwoSpin, OpenKinds) {
  EXPECT_EQ(classify_two_spin(bin(1, 2, 2, 3)).open_kind, OpenKind::SymmetricAntiferromagnetic);
  EXPECT_EQ(classify_two_spin(bin(1, 2, 3, 5)).open_kind, OpenKind::MonotoneAntiferromagnetic);
  EXPECT_EQ(classify_two_spin(bin(2, 1, 1, 2)).open_kind, OpenKind::None);
}

TEST(TwoSpin, RejectsNonBinary) { EXPECT_THROW(classify_two_spin(fn::xor3()), ArityError); }

TEST(TwoSpin, EvidenceIsPresent) {
  const TwoSpinVerdict v = classify_two_spin(bin(3, 4, 1, 2));
  bool has_lsm = false;
  for (const auto& [k, val] : v.evidence) has_lsm |= k == "lsm";
  EXPECT_TRUE(has_lsm);
}

TEST(TwoSpin, FprasTagsHaveNonnegativeFourier) {
  oracle::Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const PBFunction f = oracle::random_pb(rng, 2, 0.2);
    const TwoSpinVerdict v = classify_two_spin(f);
    if (v.tag == TwoSpinTag::FPRAS) {
      EXPECT_TRUE(is_lsm(f));
    }
    if (v.tag == TwoSpinTag::FP_Trivial) {
      EXPECT_TRUE(is_trivial_binary(f));
    }
    if (v.tag == TwoSpinTag::NoFPRAS_unless_NP_eq_RP || v.tag == TwoSpinTag::Open) {
      EXPECT_FALSE(is_lsm(f));
    }
  }
}

TEST(UpDownClassifier, SpecExamples) {
  EXPECT_EQ(classify_with_updown({fn::neq(), fn::unary(1, 3)}).tag, UpDownTag::FP);
  const UpDownVerdict imp = classify_with_updown({bin(1, 1, 0, 1)});
  EXPECT_EQ(imp.tag, UpDownTag::BIS_hard);
  EXPECT_TRUE(imp.bis_easy_flag);
  EXPECT_EQ(classify_with_updown({fn::xor3()}).tag, UpDownTag::NoFPRAS_unless_NP_eq_RP);
}

TEST(UpDownClassifier, ProductTypeFamiliesAreFP) {
  oracle::Rng rng(22);
  for (int i = 0; i < 50; ++i) {
    const PBFunction u = fn::unary(oracle::small_rational(rng), oracle::small_rational(rng));
    const PBFunction e = scale(fn::eq(), oracle::small_rational(rng, 0.0));
    EXPECT_EQ(classify_with_updown({u, e, fn::neq()}).tag, UpDownTag::FP);
  }
}

TEST(Relations, SpecExamples) {
  EXPECT_EQ(classify_relations({support(fn::xor3())}), RelTrichotomy::Affine_FP);
  EXPECT_EQ(classify_relations({support(bin(1, 1, 0, 1))}), RelTrichotomy::IM2_BIS);
  EXPECT_EQ(classify_relations({support(bin(1, 1, 1, 0))}), RelTrichotomy::SAT_equivalent);
  EXPECT_EQ(classify_relations({support(fn::xor3()), support(bin(1, 1, 0, 1))}), RelTrichotomy::SAT_equivalent);
  EXPECT_EQ(classify_relations({support(fn::eq()), support(bin(1, 1, 0, 1))}), RelTrichotomy::IM2_BIS);
}
