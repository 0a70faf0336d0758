#pragma once

#include <string>

#include <json.hpp>

#include "supersplit/parse.hpp"

namespace supersplit::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Odd-variable cap from SUPERSPLIT_MAX_N (default 12), bounding the
// exterior-algebra blowup.
int max_odd_variable_cap();

struct CommandResult {
    int exit_code = 0;
    std::string text;
    nlohmann::ordered_json json;
};

CommandResult cmd_analyze(const std::string& file_contents, const std::string& input_name);
CommandResult cmd_normalize(const std::string& file_contents, const std::string& input_name);
CommandResult cmd_decide_file(const std::string& file_contents, const std::string& input_name);
CommandResult cmd_decide_family(int d, const Rational& lambda);
CommandResult cmd_cohom(int d);

int run_cli(int argc, char** argv);

}  // namespace supersplit::cli
