#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "wstable/cli.hpp"

using namespace wstable;

namespace {

CliResult run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  return run_cli(std::move(args), in);
}

nlohmann::json fixture(const std::string& name) {
  std::ifstream f(std::string(WSTABLE_FIXTURE_DIR) + "/" + name);
  if (!f) throw std::runtime_error("missing fixture " + name);
  return nlohmann::json::parse(f);
}

}  // namespace

TEST(Cli, ClosureText) {
  auto r = run({"closure", "x1*x2*x3^2", "--weights", "3,2,1"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(parse_ideal(r.out, 3).ideal, parse_ideal("x1*x2*x3^2, x1^2*x3, x1*x2^2, x1^2*x2, x1^3", 3).ideal);
}

TEST(Cli, Decisions) {
  auto r = run({"is-wstable", "x1, x2^2", "--weights", "2,1"});
  EXPECT_EQ(r.out, "true\n");
  EXPECT_EQ(r.exit_code, 0);
  r = run({"is-wstable", "x2"});
  EXPECT_EQ(r.out, "false\n");
  EXPECT_EQ(r.exit_code, 3);
  r = run({"weight-vector", "x^2, x*y, x*z, y^3, y^2*z, y*z^2, z^4"});
  EXPECT_EQ(r.out, "not principally w-stable\n");
  EXPECT_EQ(r.exit_code, 3);
  r = run({"weight-vector", "x^3, x^2*y, x*y^3, x*y^2*z"});
  EXPECT_EQ(r.out, "5,3,1\n");
  EXPECT_EQ(r.exit_code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).exit_code, 1);
  EXPECT_EQ(run({"frobnicate", "x1"}).exit_code, 1);
  EXPECT_EQ(run({"closure", "x1^"}).exit_code, 1);
  EXPECT_EQ(run({"closure", "x1", "--weights", "1,2"}).exit_code, 1);
  EXPECT_EQ(run({"closure", "x1", "--weights", "2,1", "--nvars", "3"}).exit_code, 1);
  auto r = run({"hilbert", "x2", "--nvars", "2"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("not w-stable"), std::string::npos);
  EXPECT_EQ(run({"hilbert", "x2", "--nvars", "2", "--closure"}).exit_code, 0);
  EXPECT_EQ(run({"cone", "x2", "--nvars", "2"}).exit_code, 2);
  r = run({"closure", "--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("--weights"), std::string::npos);
}

TEST(Cli, ReadsStdin) {
  auto r = run({"closure", "-", "--weights", "2,1"}, "x1, x2^2\n");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(parse_ideal(r.out).ideal, parse_ideal("x1, x2^2").ideal);
}

TEST(Cli, CatalanLayout) {
  auto r = run({"catalan", "x1*x2^3*x3^2", "--weights", "3,2,1"});
  EXPECT_EQ(r.out,
            "| 1 0 0 |\n| 0 0 0 |\n| 0 0 0 |\n| 1 0 0 |\n| 0 0 0 |\n| 0 1 0 |\n| 1 0 0 |\n"
            "| 0 1 0 |\n| 0 1 0 |\n| 1 1 0 |\n| 0 1 2 |\n| 0 2 3 |\n| 1 1 0 |\n| 0 0 0 |\n");
}

TEST(Cli, TreeLetters) {
  auto r = run({"tree-ideal", "x^3, x^2*y, x*y^3, x*y^2*z"});
  EXPECT_EQ(r.out,
            "1: x\nx: x^2 x*y\nx^2: x^3 x^2*y\nx*y: x*y^2\nx^3:\nx^2*y:\nx*y^2: x*y^3 x*y^2*z\nx*y^3:\nx*y^2*z:\n");
}

struct FixtureCase {
  const char* file;
  std::vector<std::string> args;

  friend void PrintTo(const FixtureCase& c, std::ostream* os) { *os << c.file; }
};

class CliFixture : public ::testing::TestWithParam<FixtureCase> {};

TEST_P(CliFixture, JsonMatchesGolden) {
  auto args = GetParam().args;
  args.push_back("--json");
  auto r = run(args);
  auto expected = fixture(GetParam().file);
  EXPECT_EQ(r.exit_code, expected.at("exit_code").get<int>());
  auto actual = nlohmann::json::parse(r.out);
  EXPECT_EQ(actual, expected.at("output")) << r.out;
  for (const char* key : {"command", "input", "weights", "result"}) EXPECT_TRUE(actual.contains(key)) << key;
}

INSTANTIATE_TEST_SUITE_P(
    Golden, CliFixture,
    ::testing::Values(FixtureCase{"closure.json", {"closure", "x1*x2*x3^2", "--weights", "3,2,1"}},
                      FixtureCase{"bgens.json", {"bgens", "x1^2, x1*x2^2, x2^4", "--weights", "2,1"}},
                      FixtureCase{"is-wstable.json", {"is-wstable", "x1, x2^2", "--weights", "2,1"}},
                      FixtureCase{"tree.json", {"tree", "x2^2*x3", "--weights", "4,2,1"}},
                      FixtureCase{"tree-ideal.json", {"tree-ideal", "x^3, x^2*y, x*y^3, x*y^2*z"}},
                      FixtureCase{"catalan.json", {"catalan", "x1*x2*x3^2", "--weights", "3,2,1"}},
                      FixtureCase{"hilbert.json", {"hilbert", "x1*x2*x3^2", "--weights", "3,2,1", "--closure", "--expand-to", "10"}},
                      FixtureCase{"stanley.json", {"stanley", "x1*x2*x3^2", "--weights", "3,2,1", "--closure"}},
                      FixtureCase{"poincare.json", {"poincare", "x1*x2*x3^2", "--weights", "3,2,1", "--closure"}},
                      FixtureCase{"betti.json", {"betti", "x1*x2*x3^2", "--closure"}},
                      FixtureCase{"cone.json", {"cone", "x^3, x^2*y, x*y^3, x*y^2*z"}},
                      FixtureCase{"weight-vector.json", {"weight-vector", "x^3, x^2*y, x*y^3, x*y^2*z"}},
                      FixtureCase{"weight-vector-none.json", {"weight-vector", "x^2, x*y, x*z, y^3, y^2*z, y*z^2, z^4"}}),
    [](const auto& info) {
      std::string name = info.param.file;
      name = name.substr(0, name.find('.'));
      for (auto& c : name)
        if (c == '-') c = '_';
      return name;
    });
