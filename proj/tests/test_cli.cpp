#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "spincount/cli.hpp"
#include "spincount/error.hpp"

using namespace spincount;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SPINCOUNT_TEST_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(FunctionLiteral, ValuesOnlyAndArityPrefixed) {
  EXPECT_EQ(parse_function_literal("2 1 1 2"), fn::binary(2, 1, 1, 2));
  EXPECT_EQ(parse_function_literal("3 4 1 2"), fn::binary(3, 4, 1, 2));
  EXPECT_EQ(parse_function_literal("1 1/2 3"), fn::unary(Rational(1, 2), 3));
  EXPECT_EQ(parse_function_literal("5"), fn::constant(0, 5));
  EXPECT_THROW(parse_function_literal(""), InputError);
  EXPECT_THROW(parse_function_literal("2 1 1"), InputError);
  EXPECT_THROW(parse_function_literal("x 1 1"), InputError);
}

TEST(Cli, ClassifyIsing) {
  const CliResult r = run({"--machine", "classify", "--fun", "2 1 1 2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("tag=FPRAS"), std::string::npos) << r.out;
}

TEST(Cli, ZExactPrism) {
  const CliResult r = run({"z-exact", data("prism.csp")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4\n");
}

TEST(Cli, GadgetUpDown) {
  const CliResult r = run({"--machine", "gadget", "updown", "--fun", "3 4 1 2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("up=4,6 down=7,3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("formula=\"pps 2 0 ; f v2 v1\""), std::string::npos) << r.out;
}

TEST(Cli, OtherSubcommands) {
  EXPECT_NE(run({"--machine", "props", "--fun", "2 1 1 2"}).out.find("ising=true"), std::string::npos);
  EXPECT_NE(run({"--machine", "fourier", "--fun", "1 0 0 1"}).out.find("fourier=1/2,0,0,1/2"), std::string::npos);
  EXPECT_NE(run({"--machine", "pinning", "--fun", "2 1", "--fun", "1 2"}).out.find("tag=BothUnaries"),
            std::string::npos);
  EXPECT_NE(run({"--machine", "classify", "--mode", "relations", "--fun", "1 1 0 1"}).out.find("tag=IM2_BIS"),
            std::string::npos);
  EXPECT_NE(run({"--machine", "gadget", "approx-pin", "--fun", "1/2 1", "--epsilon", "1/100"}).out.find("k=7"),
            std::string::npos);
  const CliResult h = run({"--machine", "holant-check", data("prism.csp")});
  EXPECT_NE(h.out.find("near_assignment_total=12"), std::string::npos) << h.out;
  const CliResult t = run({"triangle-graph", data("prism.csp")});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("e c1.1 c2.1 1 between"), std::string::npos) << t.out;
}

TEST(Cli, EstimateMatchesExactWhenCapIsLarge) {
  const std::string path = temp_file("ising.csp", "fun f 2 2 1 1 2\ncon f x y\ncon f y z\ncon f z x\ncon f x w\n");
  const CliResult exact = run({"z-exact", path});
  const CliResult est = run({"z-estimate", path, "--exact-cap", "62", "--seed", "3"});
  EXPECT_EQ(exact.code, 0);
  EXPECT_EQ(est.code, 0);
  EXPECT_EQ(est.out, exact.out);
}

TEST(Cli, EstimateIsDeterministicPerSeed) {
  const std::string path = temp_file(
      "ising_big.csp",
      "fun f 2 2 1 1 2\ncon f a b\ncon f b c\ncon f c d\ncon f d a\ncon f a c\ncon f b d\ncon f a e\ncon f e c\n");
  const CliResult a = run({"--machine", "z-estimate", path, "--exact-cap", "0", "--seed", "5"});
  const CliResult b = run({"--machine", "z-estimate", path, "--exact-cap", "0", "--seed", "5"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"z-exact", "/nonexistent/file.csp"}).code, 2);
  EXPECT_EQ(run({"classify", "--fun", "1 -1"}).code, 2);
  EXPECT_EQ(run({"gadget", "updown", "--fun", "2 1 1 2"}).code, 2);
  const std::string bad = temp_file("bad.csp", "fun f 2 1 1\n");
  EXPECT_EQ(run({"z-exact", bad}).code, 2);
  EXPECT_EQ(run({"z-exact", data("prism.csp"), "--cap", "2"}).code, 3);
}
