#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tvcat/cli/workspace.hpp"

namespace tvcat::cli {

enum ExitCode : int { exit_ok = 0, exit_counterexample = 1, exit_usage = 2 };

struct Command {
  std::string verb;
  std::vector<std::string> args;   // positional object names
  std::string phi = "all";
  std::optional<std::size_t> cap;  // audit-theory, injective, audit-phi
  std::string weight;              // colim
  std::string along;               // colim
};

struct OutputOptions {
  bool json = false;
  bool timing = false;
};

struct Outcome {
  int exit_code = exit_ok;
  std::string output;
};

/// Every verb understood by dispatch.
const std::vector<std::string>& verbs();

/// Runs one command against a loaded workspace.
Outcome dispatch(const Command& cmd, const Workspace& ws, const OutputOptions& out);

/// Report for an error raised before or during a command.
std::string error_output(const std::string& verb, const std::string& kind, const std::string& message,
                         const OutputOptions& out);

/// Full command line handling: parses argv, loads the workspace, dispatches
/// and writes to the streams. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tvcat::cli
