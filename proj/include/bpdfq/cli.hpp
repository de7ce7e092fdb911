#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bpdfq/report_io.hpp"
#include "bpdfq/sequence.hpp"

namespace bpdfq {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the default --format.
inline constexpr const char* kFormatEnv = "BPDFQ_FORMAT";

/// Maps "fibonacci", "pell" and "k-fibonacci:k" to (a, b).
BiperiodicParams preset_params(const std::string& preset);

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bpdfq
