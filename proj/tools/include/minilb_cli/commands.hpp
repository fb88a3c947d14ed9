#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minilb::cli {

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

// Each command takes its arguments without the program and subcommand name.
int cmdRun(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmdValidate(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmdBench(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmdPp(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `args[0]` is the subcommand.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace minilb::cli
