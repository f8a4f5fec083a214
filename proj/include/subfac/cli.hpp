#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "subfac/ghj.hpp"

namespace subfac {

enum class OutputMode { json, dot, text };

struct RunConfig {
    std::string command;           // resolved subcommand path, e.g. "ghj principal-graph"
    int level_cap = kGhjLevelCap;  // also settable via SUBFAC_LEVEL_CAP
    int precision_digits = 6;
    OutputMode output = OutputMode::json;
};

// Parses `args` (no program name) and runs the selected command, writing the
// document to `out` and diagnostics to `err`.  Exit codes: 0 success, 1 usage
// error, 2 structural failure (level cap exceeded, hypothesis failure).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subfac
