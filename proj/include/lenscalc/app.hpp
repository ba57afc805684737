#pragma once

#include <ostream>

namespace lenscalc::cli
{
    /// Entry point of the lenscalc command line. Returns the process exit
    /// code: 0 success, 1 verification failure, 2 invalid input.
    int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
}
