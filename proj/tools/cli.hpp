#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pwc::cli {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

/// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pwc::cli
