// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "cli.hpp"
#include "instances.hpp"
#include "oracle.hpp"
#include "trisum/parse.hpp"
#include "trisum/telescoper.hpp"

using namespace trisum;
using namespace trisum::cli;

namespace {

const char* kWorked = "(x*y+x*z+y^2+y*z+1)/((x+y)*((x+y)^2+z^2))";
const char* kDegree4 =
    "(x^4+2*x^2*y^2+y^4+x^3+3*y*x^2+y^3-x*y^2+x^2-x*y)/"
    "((x+y)*(x^2+y^2+2*y+1)*(x^2+y^2)*(x+y+z)^2)";

Report cmd(Command c, std::vector<std::string> in, bool construct = false, unsigned axes = 7) {
  CliConfig cfg;
  cfg.command = c;
  cfg.construct = construct;
  cfg.axes = axes;
  cfg.json = true;
  return run(cfg, in);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;
  double worst = 0;  // slowest timed unit, when it differs from the total
  void check(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

// Times one unit of a criterion against its own limit.
template <class F>
void timed(Outcome& o, double limit, const std::string& name, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  double s = seconds_since(t0);
  if (s > o.worst) o.worst = s;
  o.check(s < limit, name + " took " + std::to_string(s) + " s");
}

Outcome summability_fixtures() {
  Outcome o;
  timed(o, 1.0, "1/(y+z)", [&] {
    Report r = cmd(Command::Summable, {"1/(y+z)"});
    o.check(r.exit_code == kDecided && r.data["summable"] == true, "1/(y+z) not summable");
    if (r.data.contains("certificate")) {
      RatFunc g = parse_expr(r.data["certificate"]["g"].get<std::string>());
      RatFunc h = parse_expr(r.data["certificate"]["h"].get<std::string>());
      o.check(check_certificate(parse_expr("1/(y+z)"), g, h), "certificate fails");
    } else {
      o.check(false, "no certificate");
    }
  });
  for (const char* f : {"1/(y^2+z^2)", "1/(y^3+z^3)"})
    timed(o, 1.0, f, [&] {
      Report r = cmd(Command::Summable, {f});
      o.check(r.exit_code == kDecided && r.data["summable"] == false, std::string(f) + " summable");
    });
  return o;
}

Outcome intro_example() {
  Outcome o;
  timed(o, 1.0, "intro", [&] {
    Report r = cmd(Command::Telescope, {"1/(x+y+z^2)"}, true);
    o.check(r.data["exists"] == true, "exists false");
    o.check(r.data["verified"] == true, "witness not verified");
    o.check(r.data["case"] == "NecessaryII", "case " + r.data["case"].dump());
    RatFunc f = parse_expr("1/(x+y+z^2)");
    o.check(verify(parse_ore("Sx - 1"), f, f, RatFunc()), "verify(Sx - 1, f, f, 0) false");
  });
  return o;
}

Outcome worked_example() {
  Outcome o;
  timed(o, 5.0, "worked", [&] {
    Report r = cmd(Command::Telescope, {kWorked});
    o.check(r.data["exists"] == true, "exists false");
    Report v = cmd(Command::Verify, {"(Sx - 1)^2", kWorked});
    o.check(v.data["verified"] == true, "(Sx - 1)^2 not verified");
  });
  return o;
}

Outcome degree_four_example() {
  Outcome o;
  timed(o, 5.0, "degree four", [&] {
    Report r = cmd(Command::Telescope, {kDegree4});
    o.check(r.data["exists"] == true, "exists false");
    Report v = cmd(Command::Verify, {"Sx - 1", kDegree4});
    o.check(v.data["verified"] == true, "Sx - 1 not verified");
    Report s = cmd(Command::Summable, {"((y+1)/(x^2+y^2+2*y+1) - y/(x^2+y^2))/(x+y+z)^2"});
    o.check(s.data["summable"] == true && s.data["verified"] == true, "inner part not summable");
  });
  return o;
}

Outcome negative_instance() {
  Outcome o;
  const char* text = "1/((x+2*y)*(x+y+z^2))";
  timed(o, 30.0, "negative", [&] {
    Report r = cmd(Command::Telescope, {text});
    o.check(r.data["exists"] == false, "exists true");
    o.check(r.data["case"] == "Suff1-NonZero", "case " + r.data["case"].dump());
    o.check(!oracle::telescoper_exists(parse_expr(text), 3, 3), "oracle found a witness");
  });
  return o;
}

Outcome shift_fixtures() {
  Outcome o;
  timed(o, 1.0, "shift", [&] {
    Report all = cmd(Command::ShiftEquiv, {"y^2+x+2*z", "y^2+x-4*y+2*z+7"});
    o.check(all.data["found"] == true && all.data["shift"] == nlohmann::json::array({1, -2, 1}),
            "xyz shift " + all.data.value("shift", nlohmann::json()).dump());
    Report yz = cmd(Command::ShiftEquiv, {"y^2+x+2*z", "y^2+x-4*y+2*z+7"}, false, parse_axes("yz"));
    o.check(yz.data["found"] == false, "yz shift found");
    Report st = cmd(Command::ShiftEquiv, {"x+y+z^2"});
    o.check(st.data["stabilizer"] == nlohmann::json::parse("[[1,-1,0]]"),
            "stabilizer " + st.data["stabilizer"].dump());
  });
  return o;
}

Outcome property_suites(const std::vector<std::string>& binaries) {
  Outcome o;
  o.check(binaries.size() == 6, "expected 6 suite binaries, got " + std::to_string(binaries.size()));
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& b : binaries) {
    std::string line = "\"" + b + "\" > /dev/null 2>&1";
    o.check(std::system(line.c_str()) == 0, b + " failed");
  }
  double s = seconds_since(t0);
  o.check(s < 300.0, "suites took " + std::to_string(s) + " s");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  trisum::testing::Gen g(2024);
  int checked = 0, positives = 0;
  for (int i = 0; checked < 50 && i < 500; ++i) {
    RatFunc f = trisum::testing::bivariate_instance(g, i % 4);
    if (f.is_zero() || f.den().total_degree() > 4) continue;
    ++checked;
    SummabilityResult s = is_summable(f, Base::Q);
    bool oracle = oracle::bivariate_summable(f);
    positives += oracle;
    if (oracle && !s.summable) o.check(false, "oracle-true/decision-false on " + f.to_string());
    if (s.summable)
      o.check(s.certificate && check_certificate(f, s.certificate->first, s.certificate->second),
              "unverified certificate on " + f.to_string());
  }
  o.check(checked == 50, "only " + std::to_string(checked) + " instances");
  o.check(positives > 0 && positives < checked, "degenerate sample");
  double s = seconds_since(t0);
  o.check(s < 600.0, "took " + std::to_string(s) + " s");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(positives) + "/" +
              std::to_string(checked) + " summable";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> suites(argv + 1, argv + argc);
  struct Criterion {
    int id;
    const char* name;
    const char* limit;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all = {
      {1, "summability fixtures", "< 1 s each", summability_fixtures},
      {2, "intro telescoper", "< 1 s", intro_example},
      {3, "worked example, (Sx - 1)^2", "< 5 s", worked_example},
      {4, "degree-four example, Sx - 1", "< 5 s", degree_four_example},
      {5, "negative instance and oracle", "< 30 s", negative_instance},
      {6, "shift-equivalence fixtures", "< 1 s", shift_fixtures},
      {7, "property suites", "< 300 s total", [&] { return property_suites(suites); }},
      {8, "oracle equivalence, 50 instances", "< 600 s", oracle_equivalence},
  };
  int failed = 0;
  for (auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    double s = seconds_since(t0);
    failed += !o.ok;
    std::printf("[%s] criterion %d: %s (%.3f s, limit %s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, s,
                c.limit, o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
