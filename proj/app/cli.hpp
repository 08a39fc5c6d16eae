// Command-line front end: parses argv, runs one subcommand, returns the exit
// status (0 pass, 1 verification failure, 2 input error).
#pragma once

#include <ostream>

namespace hopflab::cli {

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hopflab::cli
