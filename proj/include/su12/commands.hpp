#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace su12::cli {

enum ExitCode : int { Success = 0, UsageError = 1, CheckFailure = 2 };

enum class Format { Json, Csv };

struct RunConfig {
    std::string command;
    int genus = 2;
    int degree = 0;
    int d_beta = 0;
    int d_gamma = 0;
    std::size_t truncation = 8;
    int r_max = 1;
    std::optional<std::string> input;
    std::optional<std::string> output;
    Format format = Format::Json;
    std::uint64_t seed = 1;
    int cases = 200;
    bool corrupt = false;
};

// Each command writes its report to `out` and diagnostics to `err`, and
// returns the process exit code.

/// Classifies (d_beta, d_gamma) and shows both sides of each inequality.
/// |d| >= g-1 only warns.
int cmd_stability(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Partition census table with totals. Requires |d| < g-1.
int cmd_census(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Closed-form vs brute-force GIT classification of each configuration in
/// the input file. Exit 2 on any disagreement. Requires |d| < g-1.
int cmd_git_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Runs the local model verification suite. Exit 2 on any failure.
int cmd_local_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses arguments (excluding the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace su12::cli
