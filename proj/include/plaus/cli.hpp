#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "plaus/error.hpp"

namespace plaus::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    ok = 0,
    finding = 1,  // axiom violation, total conflict, impossible conditioning, ...
    usage = 2,    // bad arguments, parse or validation errors
};

/// Exit code for an error thrown by the library.
int exit_code_for(Errc code);

/// Runs one command line (args exclude the program name) and returns the
/// exit code. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plaus::cli
