#pragma once

#include <iosfwd>

namespace smsvoice::cli {

// Entry point behind the smsvoice executable. Returns the process exit
// status; every failure writes exactly one diagnostic line to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace smsvoice::cli
