#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bulab::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Exit codes.
inline constexpr int kVerified = 0;
inline constexpr int kInputError = 1;
inline constexpr int kConclusionFailed = 2;

struct InputFile {
    std::string role;
    std::string path;
    std::string fnv1a;
};

/// Outcome of one command. The text and JSON forms are both printed from this.
struct RunReport {
    std::string command;
    std::vector<InputFile> inputs;
    std::vector<std::pair<std::string, nlohmann::ordered_json>> facts;
    std::vector<std::pair<std::string, long long>> counts;
    std::vector<std::string> witnesses;
    std::vector<std::string> outputs;
    std::string verdict;
    int exit_code = kVerified;
    std::optional<double> elapsed_ms;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

/// 64-bit FNV-1a, 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Runs one invocation (args exclude the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bulab::cli
