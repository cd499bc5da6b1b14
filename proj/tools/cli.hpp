#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bpb/coords.hpp"

namespace bpb::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kRegime = 3 };

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a:b:step" (both ends included within 1e-12) or a single number.
std::vector<double> parse_range(std::string_view text);

/// Comma-separated coordinates.
std::vector<double> parse_list(std::string_view text);

}  // namespace bpb::cli
