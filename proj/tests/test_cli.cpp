#include <gtest/gtest.h>

#include "cli.hpp"
#include "trisum/parse.hpp"
#include "trisum/telescoper.hpp"

using namespace trisum;
using namespace trisum::cli;

namespace {

Report run_cmd(Command c, std::vector<std::string> in, bool construct = false, unsigned axes = 7) {
  CliConfig cfg;
  cfg.command = c;
  cfg.construct = construct;
  cfg.axes = axes;
  cfg.json = true;
  return run(cfg, in);
}

}  // namespace

TEST(Cli, TelescopeIntro) {
  Report r = run_cmd(Command::Telescope, {"1/(x+y+z^2)"}, true);
  EXPECT_EQ(r.exit_code, kDecided);
  EXPECT_EQ(r.data["schema"], 1);
  EXPECT_EQ(r.data["exists"], true);
  EXPECT_EQ(r.data["case"], "NecessaryII");
  EXPECT_EQ(r.data["L"], "Sx - 1");
  EXPECT_EQ(r.data["verified"], true);
  EXPECT_TRUE(r.data["timings"].contains("decide_ms"));
  EXPECT_EQ(r.data["config"]["max_order"], 6);
}

TEST(Cli, SummableFixtures) {
  Report r = run_cmd(Command::Summable, {"1/(y^2+z^2)"});
  EXPECT_EQ(r.exit_code, kDecided);
  EXPECT_EQ(r.data["summable"], false);
  EXPECT_EQ(r.data["residue"].size(), 1u);
  r = run_cmd(Command::Summable, {"1/(y+z)"});
  EXPECT_EQ(r.data["summable"], true);
  EXPECT_EQ(r.data["verified"], true);
  EXPECT_EQ(r.data["base"], "Q");
  r = run_cmd(Command::Summable, {"1/(x+y+z) - 1/(x+y+z+1)"});
  EXPECT_EQ(r.data["summable"], true);
  EXPECT_EQ(r.data["base"], "Q(x)");
}

TEST(Cli, ShiftEquivFixtures) {
  Report r = run_cmd(Command::ShiftEquiv, {"y^2+x+2*z", "y^2+x-4*y+2*z+7"}, false, parse_axes("yz"));
  EXPECT_EQ(r.exit_code, kDecided);
  EXPECT_EQ(r.data["found"], false);
  r = run_cmd(Command::ShiftEquiv, {"y^2+x+2*z", "y^2+x-4*y+2*z+7"});
  EXPECT_EQ(r.data["found"], true);
  EXPECT_EQ(r.data["shift"], nlohmann::json::array({1, -2, 1}));
  r = run_cmd(Command::ShiftEquiv, {"x+y+z^2"});
  EXPECT_EQ(r.data["stabilizer"], nlohmann::json::parse("[[1,-1,0]]"));
}

TEST(Cli, FactorReport) {
  Report r = run_cmd(Command::Factor, {"2*(x+y)^2*(y^2+z)"});
  EXPECT_EQ(r.exit_code, kDecided);
  EXPECT_EQ(r.data["numerator"]["content"], "2");
  EXPECT_EQ(r.data["numerator"]["factors"].size(), 2u);
}

TEST(Cli, ExitCodes) {
  Report r = run_cmd(Command::Summable, {"1/(y+"});
  EXPECT_EQ(r.exit_code, kParseError);
  EXPECT_TRUE(r.data.contains("position"));
  EXPECT_EQ(run_cmd(Command::Summable, {"1/(y-y)"}).exit_code, kParseError);
  EXPECT_EQ(run_cmd(Command::Verify, {"Sx"}).exit_code, kParseError);
  EXPECT_EQ(run_cmd(Command::Summable, {"1/((x+2*y)*(x+y+z^2))"}).exit_code, kDecided);
  // decided false is still exit code 0
  r = run_cmd(Command::Telescope, {"1/((x+2*y)*(x+y+z^2))"}, true);
  EXPECT_EQ(r.exit_code, kDecided);
  EXPECT_EQ(r.data["exists"], false);
  CliConfig cfg;
  cfg.command = Command::Telescope;
  cfg.construct = true;
  cfg.max_order = 1;
  r = run(cfg, {"(x*y+x*z+y^2+y*z+1)/((x+y)*((x+y)^2+z^2))"});
  EXPECT_EQ(r.exit_code, kBoundExceeded);
  EXPECT_EQ(r.data["exists"], true);
  EXPECT_EQ(r.data["reason"], "bound exceeded");
  EXPECT_THROW(parse_axes("xw"), std::invalid_argument);
}

TEST(Cli, WitnessRoundTrip) {
  for (const char* f : {"1/(x+y+z^2)", "(x*y+x*z+y^2+y*z+1)/((x+y)*((x+y)^2+z^2))",
                        "1/((x+y)*(x+y+z^2))", "x/(y^2+z) - (x+1)/(y^2+z+1)"}) {
    Report r = run_cmd(Command::Telescope, {f}, true);
    ASSERT_EQ(r.exit_code, kDecided) << f;
    ASSERT_TRUE(r.data.contains("L")) << f;
    std::string L = r.data["L"], g = r.data["certificate"]["g"], h = r.data["certificate"]["h"];
    EXPECT_TRUE(verify(parse_ore(L), parse_expr(f), parse_expr(g), parse_expr(h))) << f;
    Report v = run_cmd(Command::Verify, {L, f, g, h});
    EXPECT_EQ(v.data["verified"], true) << f;
    Report v2 = run_cmd(Command::Verify, {L, f});
    EXPECT_EQ(v2.data["verified"], true) << f;
  }
  Report s = run_cmd(Command::Summable, {"1/(y+z)"});
  std::string g = s.data["certificate"]["g"], h = s.data["certificate"]["h"];
  EXPECT_TRUE(check_certificate(parse_expr("1/(y+z)"), parse_expr(g), parse_expr(h)));
}

TEST(Cli, VerifyRejects) {
  Report r = run_cmd(Command::Verify, {"Sx - 1", "1/(x+y+z^2)", "0", "0"});
  EXPECT_EQ(r.exit_code, kDecided);
  EXPECT_EQ(r.data["verified"], false);
  r = run_cmd(Command::Verify, {"Sx - 1", "1/((x+2*y)*(x+y+z^2))"});
  EXPECT_EQ(r.data["verified"], false);
}

TEST(Cli, PreFactored) {
  CliConfig cfg;
  cfg.command = Command::Summable;
  cfg.pre_factored = true;
  Report r = run(cfg, {"1/((y+z)*(y+z+1))"});
  EXPECT_EQ(r.exit_code, kDecided);
  EXPECT_EQ(r.data["summable"], true);
  EXPECT_EQ(r.data["verified"], true);
  r = run(cfg, {"1/((y+z)*(y^2+2*y*z+z^2+y+z))"});
  EXPECT_EQ(r.exit_code, kParseError);
  cfg.check_irreducible = true;
  r = run(cfg, {"1/((y+z)*(y^2-z^2+1))"});
  EXPECT_EQ(r.exit_code, kDecided);
  r = run(cfg, {"1/((y^2-z^2))"});
  EXPECT_EQ(r.exit_code, kParseError);
  cfg.command = Command::Telescope;
  cfg.construct = true;
  cfg.check_irreducible = false;
  r = run(cfg, {"1/((x+y)*(x+y+z^2))"});
  EXPECT_EQ(r.exit_code, kDecided);
  EXPECT_EQ(r.data["verified"], true);
}
