#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tlocus {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_input = 2,            // parse or validation failure
    exit_not_wr = 3,           // G1 is not weakly reversible
    exit_enumeration = 4,      // enumeration limit exceeded
    exit_hash = 5,             // edge vector written for another graph
    exit_psi_domain = 6,       // Psi argument outside its domain
};

/// Runs the tool on `args` (without the program name); reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tlocus
