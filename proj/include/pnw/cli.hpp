#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pnw::cli {

enum ExitCode : int {
    kOk = 0,
    kViolations = 1,  // a verification subcommand found counterexamples
    kUsage = 2,
};

inline constexpr std::uint64_t kDefaultSeed = 1;

// Comma-separated items, each a value or an inclusive range `start:end[:step]`.
// Throws std::invalid_argument on malformed input or start > end.
std::vector<std::uint64_t> parse_integer_grid(const std::string& text);
std::vector<double> parse_real_grid(const std::string& text);

// args excludes the program name. Output goes to `out` unless --output is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pnw::cli
