#include <gtest/gtest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "spincount/error.hpp"
#include "spincount/instance.hpp"

using namespace spincount;

namespace {

const char* kPrism = "fun xor3 3 1 0 0 1 0 1 1 0\ncon xor3 x y z\ncon xor3 x y z\n";

PBFunction bin(int a, int b, int c, int d) { return fn::binary(a, b, c, d); }

}  // namespace

TEST(Parse, SpecExamples) {
  const CspInstance imp = parse_instance("fun imp 2 1 1 0 1\ncon imp x y\n");
  EXPECT_EQ(imp.constraints().size(), 1u);
  EXPECT_EQ(imp.variables(), (std::vector<std::string>{"x", "y"}));
  const CspInstance prism = parse_instance(kPrism);
  EXPECT_EQ(prism.constraints().size(), 2u);
  EXPECT_EQ(prism.table("xor3"), fn::xor3());
  EXPECT_NO_THROW(parse_instance("fun imp 2 1 1 0 1\ncon imp x x\n"));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_instance("con f x\n"), InputError);
  EXPECT_THROW(parse_instance("fun f 2 1 1 1\n"), InputError);
  EXPECT_THROW(parse_instance("fun f 1 1 1\ncon f x y\n"), ArityError);
  EXPECT_THROW(parse_instance("fun f 1 1 1\nfun f 1 1 2\n"), InputError);
  EXPECT_THROW(parse_instance("bogus\n"), InputError);
  try {
    parse_instance("# comment\nfun f 1 1 1\ncon g x\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Parse, SerializeRoundTrip) {
  oracle::Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const CspInstance inst = oracle::random_instance(
        rng, {{"a", oracle::random_pb(rng, 2)}, {"b", oracle::random_pb(rng, 1)}}, oracle::uniform(rng, 1, 5),
        oracle::uniform(rng, 0, 6));
    EXPECT_EQ(parse_instance(serialize(inst)), inst);
  }
}

TEST(ZExact, SpecExamples) {
  EXPECT_EQ(z_exact(parse_instance("fun imp 2 1 1 0 1\ncon imp x y\n")), 3);
  EXPECT_EQ(z_exact(parse_instance(kPrism)), 4);
  EXPECT_EQ(z_exact(CspInstance{}), 1);
}

TEST(ZExact, MatchesPlainEnumeration) {
  oracle::Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    const CspInstance inst = oracle::random_instance(
        rng, {{"a", oracle::random_pb(rng, 2, 0.3)}, {"b", oracle::random_pb(rng, 3, 0.3)}},
        oracle::uniform(rng, 1, 10), oracle::uniform(rng, 0, 10));
    EXPECT_EQ(z_exact(inst), oracle::z(inst));
  }
}

TEST(ZExact, CapacityCap) {
  CspInstance inst;
  inst.add_function("u", fn::unary(1, 1));
  for (int i = 0; i < 24; ++i) inst.add_constraint("u", {"x" + std::to_string(i)});
  EXPECT_EQ(z_exact(inst), pow(Rational(2), 24));
  inst.add_constraint("u", {"x24"});
  EXPECT_THROW(z_exact(inst), CapacityError);
  Caps tiny;
  tiny.z_exact_vars = 4;
  EXPECT_THROW(z_exact(parse_instance(kPrism + std::string("con xor3 a b c\n")), tiny), CapacityError);
}

TEST(ZExact, EnvironmentOverridesCaps) {
  ::setenv("SPINCOUNT_BRUTE_CAP", "3", 1);
  const Caps c = default_caps();
  ::unsetenv("SPINCOUNT_BRUTE_CAP");
  EXPECT_EQ(c.z_exact_vars, 3);
  EXPECT_EQ(c.near_assignment_vars, 3);
  EXPECT_EQ(default_caps().z_exact_vars, 24);
}

TEST(ZProductType, SpecExamples) {
  CspInstance a;
  a.add_function("neq", fn::neq());
  a.add_function("u", fn::unary(1, 2));
  a.add_constraint("neq", {"x", "y"});
  a.add_constraint("u", {"x"});
  EXPECT_EQ(z_product_type(a), 3);
  CspInstance b;
  b.add_function("eq", fn::eq());
  b.add_function("neq", fn::neq());
  b.add_constraint("eq", {"x", "y"});
  b.add_constraint("neq", {"x", "y"});
  EXPECT_EQ(z_product_type(b), 0);
}

TEST(ZProductType, RejectsOtherFunctions) {
  EXPECT_THROW(z_product_type(parse_instance(kPrism)), PreconditionError);
}

TEST(ZProductType, AgreesWithEnumeration) {
  oracle::Rng rng(33);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::pair<std::string, PBFunction>> funcs = {
        {"neq", fn::neq()},
        {"eq", scale(fn::eq(), oracle::small_rational(rng, 0.0))},
        {"u", fn::unary(oracle::small_rational(rng), oracle::small_rational(rng))},
        {"r", bin(1, 2, 3, 6)},
        {"z", fn::constant(1, 0)},
    };
    if (i % 5) funcs.pop_back();
    const CspInstance inst = oracle::random_instance(rng, funcs, oracle::uniform(rng, 1, 12), oracle::uniform(rng, 0, 14));
    EXPECT_EQ(z_product_type(inst), oracle::z(inst));
  }
}

TEST(ToHolant, SpecExamples) {
  const CspInstance prism = parse_instance(kPrism);
  EXPECT_TRUE(is_holant(prism));
  EXPECT_EQ(to_holant(prism).instance, prism);

  const CspInstance deg3 = parse_instance("fun imp 2 1 1 0 1\ncon imp x a\ncon imp x b\ncon imp c x\n");
  const HolantInstance h3 = to_holant(deg3);
  EXPECT_TRUE(is_holant(h3.instance));
  EXPECT_EQ(z_exact(h3.instance), z_exact(deg3));

  const CspInstance deg4 =
      parse_instance("fun imp 2 1 1 0 1\ncon imp x a\ncon imp x b\ncon imp c x\ncon imp x x\n");
  const HolantInstance h4 = to_holant(deg4);
  EXPECT_TRUE(is_holant(h4.instance));
  EXPECT_EQ(z_exact(h4.instance), z_exact(deg4));
}

TEST(ToHolant, PreservesZOnRandomInstances) {
  oracle::Rng rng(34);
  for (int i = 0; i < 50; ++i) {
    const CspInstance inst = oracle::random_instance(
        rng, {{"a", oracle::random_pb(rng, 2)}, {"b", oracle::random_pb(rng, 1)}, {"c", oracle::random_pb(rng, 3)}},
        oracle::uniform(rng, 1, 5), oracle::uniform(rng, 0, 5));
    const HolantInstance h = to_holant(inst);
    EXPECT_TRUE(is_holant(h.instance));
    EXPECT_EQ(oracle::z(h.instance), oracle::z(inst));
  }
}

TEST(ToHolant, AsHolantChecksDegrees) {
  EXPECT_THROW(as_holant(parse_instance("fun imp 2 1 1 0 1\ncon imp x y\n")), PreconditionError);
}

TEST(Holographic, SpecExamples) {
  const Matrix2 h{1, 1, 1, -1};
  HolantInstance xor3{parse_instance(kPrism)};
  const HolantInstance t = holographic_transform(xor3, h);
  EXPECT_EQ(t.instance.table("xor3"), scale(fn::eq3(), 4));

  HolantInstance eq{parse_instance("fun eq 2 1 0 0 1\ncon eq x y\ncon eq x y\n")};
  EXPECT_EQ(holographic_transform(eq, h).instance.table("eq"), PBFunction(2, {2, 0, 0, 2}));
  EXPECT_EQ(holographic_transform(eq, Matrix2{1, 0, 0, 1}).instance, eq.instance);
  EXPECT_THROW(holographic_transform(eq, Matrix2{1, 1, 0, 1}), PreconditionError);
}

TEST(NearAssignment, SpecExamples) {
  EXPECT_EQ(near_assignment_total(as_holant(parse_instance(kPrism))), 12);
  EXPECT_EQ(near_assignment_total(as_holant(parse_instance("fun eq 2 1 0 0 1\ncon eq x x\n"))), 0);
}

TEST(NearAssignment, MatchesDirectSplitting) {
  oracle::Rng rng(35);
  for (int i = 0; i < 20; ++i) {
    const CspInstance inst =
        oracle::random_holant(rng, {oracle::random_pb(rng, 3), oracle::random_pb(rng, 3), oracle::random_pb(rng, 2)});
    // Direct definition: for every pair u != v, flip the second occurrence of both.
    const auto& vars = inst.variables();
    Rational expected = 0;
    for (std::size_t a = 0; a < vars.size(); ++a) {
      for (std::size_t b = a + 1; b < vars.size(); ++b) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars.size()); ++mask) {
          Rational prod = 1;
          std::vector<int> seen(vars.size(), 0);
          for (const auto& c : inst.constraints()) {
            std::uint32_t x = 0;
            for (const auto& v : c.scope) {
              const int k = inst.variable_index(v);
              int bit = static_cast<int>((mask >> k) & 1u);
              const bool split = k == static_cast<int>(a) || k == static_cast<int>(b);
              if (split && seen[k]++ == 1) bit ^= 1;
              x = (x << 1) | static_cast<std::uint32_t>(bit);
            }
            prod *= inst.table(c.function)[x];
          }
          expected += prod;
        }
      }
    }
    EXPECT_EQ(near_assignment_total(as_holant(inst)), expected);
  }
}
