#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liedelta::cli {

// Runs one CLI invocation. args excludes the program name. Returns the
// process exit code: 0 on success, 1 when a verification check fails or an
// internal consistency error is detected, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liedelta::cli
