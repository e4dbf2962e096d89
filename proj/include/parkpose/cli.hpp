#pragma once

#include <iosfwd>

namespace parkpose::cli {

// Runs the command-line front end.  Exit codes: 0 for success or a true
// answer, 1 for a false answer or a failed check, 2 for usage or parse
// errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace parkpose::cli
