#pragma once

// Command-line front end: flag/config parsing, command dispatch and the
// JSON/CSV encoders for the result files.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "homlab/beam_splitter.h"
#include "homlab/joint_distribution.h"

namespace homlab::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kDomain = 3,
    kIo = 4,
};

/// Settings for one run. Every field is optional so a config file and the
/// command-line flags can be layered.
struct RunConfig {
    std::optional<std::string> command;
    std::optional<std::string> state_a;
    std::optional<std::string> state_b;
    std::optional<std::string> bs;
    std::optional<int> grid_max;
    std::optional<double> eta_a;
    std::optional<double> eta_b;
    std::optional<int> source_max;
    std::optional<std::string> output;
    std::optional<std::string> format;

    std::optional<int> n;
    std::optional<int> m_max;
    std::optional<int> m_a_min;
    std::optional<int> degree;
    std::optional<std::int64_t> lo;
    std::optional<std::int64_t> hi;

    std::optional<int> t;
    std::optional<int> n_prime;
    std::optional<double> eta;
    std::optional<double> r;
    std::optional<int> cutoff;

    std::optional<int> j_min;
    std::optional<int> j_max;

    std::optional<std::string> tables;
};

/// Reads a JSON object whose keys are RunConfig field names.
/// Unknown keys or wrongly typed values throw invalid_argument.
RunConfig parse_config_json(std::string_view text);

/// Fields set in `overrides` replace those in `base`.
void merge_config(RunConfig &base, const RunConfig &overrides);

/// "1/2", "0.75" (exact) or "theta=1.0472" (radians).
BeamSplitterSetting parse_bs(std::string_view text);

std::string distribution_json(const JointDistribution &dist, const RunConfig &config);
std::string distribution_csv(const JointDistribution &dist);
/// Reads the grid and bookkeeping fields back from distribution_json output.
JointDistribution read_distribution_json(std::string_view text);

/// Writes via a temporary file and a rename; throws ios_base::failure.
void write_atomically(const std::string &path, std::string_view contents);

/// Full CLI entry point. Results go to --output (or `out`), diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace homlab::cli
