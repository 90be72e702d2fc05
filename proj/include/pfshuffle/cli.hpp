#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pfshuffle {

struct RunConfig {
    int n = 0;
    std::string command;
    bool json = false;
    unsigned threads = 1;
    std::size_t step_budget = 1'000'000;
    bool allow_large = false;
    std::uint64_t seed = 0;
};

void to_json(nlohmann::json& j, const RunConfig& c);

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs one subcommand. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string library_version();

} // namespace pfshuffle
