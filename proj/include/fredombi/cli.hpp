#ifndef FREDOMBI_CLI_HPP
#define FREDOMBI_CLI_HPP

namespace fredombi {

/// Command dispatch for the fredombi tool. Exit codes: 0 success,
/// 1 infeasible, 2 input error, 3 internal/theory violation.
int run_cli(int argc, const char* const* argv);

}  // namespace fredombi

#endif
