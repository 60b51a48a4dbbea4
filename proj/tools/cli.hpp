#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace trisum::cli {

enum class Command { Summable, Telescope, Verify, Factor, ShiftEquiv };

struct CliConfig {
  Command command = Command::Summable;
  bool construct = false;
  int max_order = 6;
  bool json = false;
  unsigned axes = 7;  // bit v for variable v
  bool pre_factored = false;
  bool check_irreducible = false;
};

struct Report {
  int exit_code = 0;
  nlohmann::json data;
  std::string text;
};

/// Exit codes of run().
inline constexpr int kDecided = 0;
inline constexpr int kParseError = 1;
inline constexpr int kBoundExceeded = 2;

const char* command_name(Command c);
/// Parses "xyz", "yz", ... into an axis mask; throws std::invalid_argument.
unsigned parse_axes(const std::string& s);

/// Runs one command on its positional inputs:
///   summable F | telescope F | factor P | verify L F [G H] | shift-equiv P [Q]
Report run(const CliConfig& config, const std::vector<std::string>& inputs);

}  // namespace trisum::cli
