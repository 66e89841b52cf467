#pragma once

// Command-line front-end of so3ctl.
//
// Exit status: 0 success / equivalent / valid, 1 inequivalent / invalid /
// failed check, 2 numeric failure or malformed input.

#include <ostream>

namespace so3contact::cli {

enum ExitStatus : int {
  kOk = 0,
  kNegative = 1,
  kFailure = 2,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace so3contact::cli
