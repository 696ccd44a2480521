// Subcommands shared by the C API and the command-line tool.
#pragma once

#include "arthurkit/text.hpp"

namespace arthurkit {

struct CommandOptions {
  bool json = false;
  bool strict = false;
  std::string oracle = "unramified";  // arthur-type
  std::string group = "Sp";           // steinberg, enumerate
  std::int64_t n = 1;                 // steinberg
  std::int64_t max_N = 9;             // enumerate
  std::string kind = "param";         // enumerate: param | ems | ldata
  std::vector<std::string> rhos = {"triv"};  // enumerate: triv, chi, s
};

struct CommandResult {
  std::string output;
  int exit_code = 0;  // 0 ok, 1 input error, 2 negative verdict under --strict
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNegative = 2;

// Names of all subcommands, in help order.
const std::vector<std::string>& command_names();
bool command_needs_input(const std::string& name);

// Runs one subcommand over every applicable object of ws. Throws InputError,
// PreconditionError or UnsupportedInput on bad input.
CommandResult run_command(const std::string& name, const Workspace& ws, const CommandOptions& opts);

}  // namespace arthurkit
