#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wehrl::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParse = 2,
    kInvariant = 3,
    kOracle = 4,
    kIo = 5,
    kSchurViolation = 6,
};

struct RunConfig {
    std::string command;
    std::optional<std::filesystem::path> input_path;
    std::vector<double> q_grid;
    std::size_t samples{100000};
    std::uint64_t seed{20240601};
    std::optional<std::filesystem::path> output_path;
    std::string format{"json"};
    std::vector<std::size_t> dims;
    std::size_t pairs{1000};
};

// 50 evenly spaced orders on [0.1, 20].
std::vector<double> default_scan_grid();

// Executes one command. Results go to cfg.output_path, or to `out` when no
// path is set (figures always write into a directory). Library errors
// propagate; the return value is kOk, kOracle or kSchurViolation.
int run(const RunConfig& cfg, std::ostream& out);

// Parses flags, runs, and maps every failure onto an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace wehrl::cli
