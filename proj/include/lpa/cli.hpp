#pragma once

#include <string>
#include <vector>

#include "lpa/io.hpp"

namespace lpa::cli {

/// Process exit codes. A false verdict is still `ok`.
enum ExitCode : int {
    ok = 0,
    failure = 1,
    usage = 2,
    bad_document = 3,
    cap_exceeded = 4,
};

struct CommandResult {
    int code = ok;
    /// Error text when code != ok.
    std::string message;
    /// Result document when code == ok and the command produced one.
    io::Json payload;
    /// Text to print instead of the payload (help output).
    std::string text;

    /// What the command-line tool writes to stdout.
    std::string render() const;
};

/// Runs one command; argv[0] is the program name. Never throws.
CommandResult run(const std::vector<std::string>& argv);

}  // namespace lpa::cli
