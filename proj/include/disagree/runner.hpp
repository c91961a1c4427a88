#pragma once

// Batch runner behind the command-line tool.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace disagree {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNonConvergence = 3;

struct RunManifest {
    std::string config_path;
    std::string experiment;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<int> grid;  // effort grid points
    std::optional<std::uint64_t> mc;  // Monte Carlo paths
};

const std::vector<std::string>& experiment_names();

// Writes results.csv, report.txt and curves.csv into out_dir.  Messages go to `log`.
int run(const RunManifest& manifest, std::ostream& log);

// Formats a double so that it parses back to the same value.
std::string format_number(double x);

}  // namespace disagree
