#pragma once

namespace lastzero::cli {

// Batch front end; parses argv, runs one subcommand and emits its table plus
// a run manifest. Returns the process exit code: 0 on success, 2 on invalid
// arguments, 3 on numerical non-convergence.
int run(int argc, const char* const* argv);

}  // namespace lastzero::cli
