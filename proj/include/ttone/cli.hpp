#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ttone::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 1,
    kClassMismatch = 2,
    kTimeout = 3,
    kInternalInvariant = 4,
};

struct RunConfig {
    std::string command;
    std::optional<std::string> input;     // edge-list file
    std::optional<std::string> generator; // named(...) spec
    std::optional<std::string> coloring;  // JSON coloring file for `verify`
    unsigned t = 2;
    std::optional<unsigned> k;
    unsigned kmax = 12;
    std::string algorithm;
    std::uint64_t seed = 1;
    std::optional<double> timeout_secs;
    std::optional<std::string> out;
    std::size_t count = 20;               // bounds-suite instances per colorer
};

// Throws Error(InvalidArgument) when the config is inconsistent.
void validate(const RunConfig& config);

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and dispatches.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ttone::cli
