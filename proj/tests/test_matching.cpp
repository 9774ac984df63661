#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spincount/error.hpp"
#include "spincount/matching.hpp"

using namespace spincount;

namespace {

const char* kPrism = "fun xor3 3 1 0 0 1 0 1 1 0\ncon xor3 x y z\ncon xor3 x y z\n";

PBFunction bin(int a, int b, int c, int d) { return fn::binary(a, b, c, d); }

WeightedMultigraph two_vertices(std::vector<Rational> weights) {
  WeightedMultigraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  for (const auto& w : weights) g.add_edge(0, 1, w);
  return g;
}

}  // namespace

TEST(Multigraph, TextRoundTrip) {
  oracle::Rng rng(41);
  const WeightedMultigraph g = oracle::random_multigraph(rng, 5, 8, false);
  const WeightedMultigraph h = parse_multigraph(g.to_text());
  EXPECT_EQ(h.to_text(), g.to_text());
  EXPECT_THROW(parse_multigraph("v a\nv a\n"), InputError);
  EXPECT_THROW(parse_multigraph("v a\ne a b 1 plain\n"), InputError);
  EXPECT_THROW(parse_multigraph("v a\nv b\ne a b 1 sideways\n"), InputError);
}

TEST(Lift, SpecExamples) {
  const PBFunction eq_lift = sdp3_lift(fn::eq());
  for (std::uint32_t x = 0; x < 8; ++x) {
    const int a = bit_at(x, 0, 3);
    const int b = bit_at(x, 1, 3);
    EXPECT_EQ(eq_lift[x], a == b ? 1 : 0);
  }
  EXPECT_EQ(eq_lift.at({1, 1, 0}), 1);
  const PBFunction f = bin(2, 1, 1, 2);
  const PBFunction fl = sdp3_lift(f);
  EXPECT_EQ(fl.at({0, 0, 0}), 2);
  EXPECT_EQ(fl.at({1, 1, 1}), f.at({0, 0}));
  EXPECT_EQ(fl.at({1, 0, 0}), f.at({1, 0}));
  EXPECT_EQ(fl.at({1, 0, 1}), f.at({0, 1}));
  EXPECT_THROW(sdp3_lift(fn::xor3()), ArityError);
}

TEST(Lift, InstanceDoublesZ) {
  const CspInstance one = parse_instance("fun f 2 2 1 1 2\ncon f x y\n");
  EXPECT_EQ(z_exact(one), 6);
  EXPECT_EQ(z_exact(lift_instance(one)), 12);
  const CspInstance two = parse_instance("fun f 2 2 1 1 2\ncon f x y\ncon f x y\n");
  EXPECT_EQ(z_exact(lift_instance(two)), 2 * z_exact(two));
  EXPECT_EQ(z_exact(lift_instance(CspInstance{})), 2);
}

TEST(FourierForm, NormalizesXorInputsThroughLift) {
  // A lifted EQ instance: Z(input) = kappa * Z(fourier form).
  const CspInstance lifted = lift_instance(parse_instance("fun eq 2 1 0 0 1\ncon eq x y\ncon eq y z\n"));
  const FourierForm form = holant_fourier_form(lifted);
  EXPECT_EQ(form.kappa * z_exact(form.holant.instance), z_exact(lifted));
  for (const auto& f : form.holant.instance.functions()) {
    EXPECT_EQ(f.table[0], 1);
  }
}

TEST(FourierForm, RandomSdp3InstancesKeepZ) {
  oracle::Rng rng(42);
  for (int i = 0; i < 30; ++i) {
    const CspInstance inst =
        oracle::random_instance(rng, {{"f", oracle::random_cP(rng, 2)}}, oracle::uniform(rng, 1, 5), oracle::uniform(rng, 1, 5));
    const CspInstance lifted = lift_instance(inst);
    const FourierForm form = holant_fourier_form(lifted);
    EXPECT_EQ(form.kappa * oracle::z(form.holant.instance), oracle::z(lifted));
  }
}

TEST(FourierForm, ZeroFunctionAndRejections) {
  CspInstance zero;
  zero.add_function("z", fn::constant(3, 0));
  zero.add_constraint("z", {"x", "y", "w"});
  EXPECT_EQ(holant_fourier_form(zero).kappa, 0);
  EXPECT_THROW(holant_fourier_form(parse_instance(kPrism)), PreconditionError);
  EXPECT_THROW(holant_fourier_form(parse_instance("fun eq 2 1 0 0 1\ncon eq x y\n")), PreconditionError);
}

TEST(TriangleGraph, Prism) {
  const WeightedMultigraph g = build_triangle_graph(as_holant(parse_instance(kPrism)));
  EXPECT_EQ(g.vertex_count(), 6);
  EXPECT_EQ(g.edges().size(), 9u);
  for (const auto& e : g.edges()) EXPECT_EQ(e.weight, 1);
  EXPECT_EQ(count_pm_exact(g), 4);
  EXPECT_EQ(oracle::perfect_matchings(g), 4);
}

TEST(TriangleGraph, RejectsOutsideClass) {
  EXPECT_THROW(build_triangle_graph(as_holant(parse_instance("fun eq3 3 1 0 0 0 0 0 0 1\ncon eq3 x x y\ncon eq3 y z z\n"))),
               PreconditionError);
}

TEST(TriangleGraph, RepeatedVariableIsSelfLoop) {
  const CspInstance inst = parse_instance("fun w 3 1 0 0 2 0 3 5 0\ncon w x x y\ncon w y z z\n");
  const WeightedMultigraph g = build_triangle_graph(as_holant(inst));
  EXPECT_EQ(count_pm_exact(g), z_exact(inst));
  EXPECT_EQ(oracle::perfect_matchings(g), z_exact(inst));
}

TEST(Matchings, SpecExamples) {
  const WeightedMultigraph edge = two_vertices({Rational(5, 2)});
  EXPECT_EQ(count_pm_exact(edge), Rational(5, 2));
  EXPECT_EQ(count_npm_exact(edge), 1);
  WeightedMultigraph k3;
  for (const char* n : {"a", "b", "c"}) k3.add_vertex(n);
  k3.add_edge(0, 1, 1);
  k3.add_edge(1, 2, 1);
  k3.add_edge(0, 2, 1);
  EXPECT_EQ(count_pm_exact(k3), 0);
  EXPECT_EQ(count_npm_exact(k3), 3);
}

TEST(Matchings, PrismNearPerfectBound) {
  const CspInstance prism = parse_instance(kPrism);
  const WeightedMultigraph g = build_triangle_graph(as_holant(prism));
  const Rational n = 3;
  EXPECT_LE(count_npm_exact(g), 3 * n * n * count_pm_exact(g));
  EXPECT_EQ(count_npm_exact(g), oracle::near_perfect_matchings(g));
}

TEST(Matchings, AgreeWithEdgeSubsetEnumeration) {
  oracle::Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const int n = oracle::uniform(rng, 1, 9);
    const WeightedMultigraph g = oracle::random_multigraph(rng, n, oracle::uniform(rng, 0, 14), false);
    EXPECT_EQ(count_pm_exact(g), oracle::perfect_matchings(g));
    EXPECT_EQ(count_npm_exact(g), oracle::near_perfect_matchings(g));
  }
}

TEST(Matchings, Cap) {
  WeightedMultigraph g;
  for (int i = 0; i < 32; ++i) g.add_vertex("u" + std::to_string(i));
  EXPECT_THROW(count_pm_exact(g), CapacityError);
  EXPECT_EQ(count_pm_exact(g, 40), 0);
}

TEST(Integerize, SpecExamples) {
  const Integerized a = integerize(two_vertices({Rational(1, 2), Rational(1, 3)}));
  EXPECT_EQ(a.d, 6);
  EXPECT_EQ(count_pm_exact(a.graph), 5);
  EXPECT_EQ(count_pm_exact(a.graph), Rational(6) * Rational(5, 6));
  Rational total = 0;
  for (const auto& e : a.graph.edges()) total += e.weight;
  EXPECT_EQ(total, 5);

  const Integerized b = integerize(two_vertices({2, 3}));
  EXPECT_EQ(b.d, 1);
  EXPECT_EQ(count_pm_exact(b.graph), 5);

  const WeightedMultigraph prism = build_triangle_graph(as_holant(parse_instance(kPrism)));
  const Integerized c = integerize(prism);
  EXPECT_EQ(c.d, 1);
  EXPECT_EQ(c.graph.to_text(), prism.to_text());
}
