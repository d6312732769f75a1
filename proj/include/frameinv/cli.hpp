#pragma once

namespace frameinv {

// Entry point for the command-line tool. Subcommands: lambda, intersect,
// solve, check. Exit codes: 0 success, 2 hypothesis or oracle failure,
// 3 parse/validation error, 4 resource cap exceeded.
int run_cli(int argc, char** argv);

} // namespace frameinv
