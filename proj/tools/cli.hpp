#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacpoly::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kPrecondition = 2;
constexpr int kInternal = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Splits a manifest line on whitespace; double quotes group words.
std::vector<std::string> split_command_line(const std::string& line);

}  // namespace jacpoly::cli
