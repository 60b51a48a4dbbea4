#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "cli.hpp"

using namespace trisum::cli;

namespace {

std::vector<std::string> stdin_lines() {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(std::cin, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Summability and telescoper decisions for rational functions in x, y, z"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::vector<std::string> inputs;
  std::string axes = "xyz";

  auto add = [&](const char* name, const char* help, Command cmd) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", inputs, "expressions (read from stdin, one per line, when absent)");
    sub->add_flag("--json", cfg.json, "print the JSON report");
    sub->callback([&cfg, cmd] { cfg.command = cmd; });
    return sub;
  };
  CLI::App* summ = add("summable", "decide (Sy, Sz)-summability of F", Command::Summable);
  summ->add_flag("--pre-factored", cfg.pre_factored, "take the denominator factors as written");
  summ->add_flag("--check-irreducible", cfg.check_irreducible, "also check pre-factored factors are irreducible");
  CLI::App* tel = add("telescope", "decide whether F has a telescoper in Sx", Command::Telescope);
  tel->add_flag("--construct", cfg.construct, "build and verify a telescoper");
  tel->add_option("--max-order", cfg.max_order, "order bound for --construct")->check(CLI::PositiveNumber);
  tel->add_flag("--pre-factored", cfg.pre_factored, "take the denominator factors as written");
  tel->add_flag("--check-irreducible", cfg.check_irreducible, "also check pre-factored factors are irreducible");
  add("verify", "check that L(F) = Dy(G) + Dz(H); finds G, H when omitted", Command::Verify);
  add("factor", "factor a polynomial over Q", Command::Factor);
  CLI::App* se = add("shift-equiv", "find a shift taking P to Q, or the stabilizer of P", Command::ShiftEquiv);
  se->add_option("--axes", axes, "variables allowed to shift (default xyz)");

  CLI11_PARSE(app, argc, argv);
  if (inputs.empty()) inputs = stdin_lines();
  Report r;
  try {
    cfg.axes = parse_axes(axes);
    r = run(cfg, inputs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  if (cfg.json)
    std::cout << r.data.dump(2) << "\n";
  else
    (r.exit_code == kParseError ? std::cerr : std::cout) << r.text;
  return r.exit_code;
}
