#pragma once

namespace trinion::cli {

// Parses arguments, runs one subcommand, prints a JSON report.
// Exit codes: 0 all checks passed, 1 a check or tolerance failed, 2 schema
// or argument errors.
int run(int argc, char** argv);

}  // namespace trinion::cli
