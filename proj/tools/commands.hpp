#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kac/tower.hpp"
#include "algebra_io.hpp"

namespace kac::io {

constexpr const char* tool_version = "0.1.0";

enum ExitCode { exit_ok = 0, exit_parse = 2, exit_validation = 3, exit_numeric = 4 };

struct Options {
    std::string command;
    std::string input;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    int level = 1;
    int max_level = 4;
    long cap = default_level_cap;
    int trials = 5;
    std::string report_path;
    std::string format = "text";
    std::string output;
    bool timing = false;
};

struct CommandResult {
    ResidualReport report;
    json data = json::object();
    // Lines printed ahead of the entry list in text mode.
    std::vector<std::string> headline;
};

const std::vector<std::string>& command_names();

// Runs one subcommand. Throws ParseError or kac::Error.
CommandResult execute(const Options& opt);

// Deterministic report document; timing only when requested.
json report_json(const Options& opt, const std::string& input_digest, const CommandResult& r,
                 double seconds = -1.0);

// Full front end: parse arguments, execute, print, write the report and
// return the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kac::io
