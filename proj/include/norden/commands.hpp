#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace norden {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,             ///< success, every check passed
  exit_check_failed = 1,   ///< a structural check or identity failed
  exit_usage = 2,          ///< usage, parse or validation error
};

/// Runs one command line (args[0] is the program name) and streams output.
///
///   check     <spec> | --family table1
///   classify  <spec> | --family table1
///   curvature <spec> | --family table1
///   report    <spec> | --family table1 [--eval name=rat,...] [--format text|csv|json]
///   regress   <spec> | --family table1 [--eval name=rat,...]
///   family    --table1 --emit-spec
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace norden
