#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace roughlab {

struct RunConfig {
    std::string command;
    std::map<std::string, std::string> params;  // without the leading "--"
    std::string output_path;                    // empty: standard output
    std::string format = "json";                // json or csv
    std::uint64_t seed = 0;
};

struct ParamSpec {
    std::string name;
    std::string fallback;  // empty: optional without a default
    std::string help;
};

const std::vector<std::string>& commands();
// Throws Error(usage) for an unknown command.
const std::vector<ParamSpec>& command_params(const std::string& command);

struct RunResult {
    int status = 0;  // 0 ok, 1 usage or domain error, 2 failed verdicts, 3 undecided
    std::string output;
    std::string message;
};

// Never throws; errors come back as status 1 (3 for undecided comparisons)
// with the message set.
RunResult execute(const RunConfig& config);

// execute, then write output to config.output_path (or stdout) and the
// message to stderr.
int run(const RunConfig& config);

}  // namespace roughlab
