#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pisot {

/* Full command-line front end; args exclude the program name.  Returns the
 * process exit code: 0 success, 1 usage error, 2 contract violation
 * (malformed files included), 3 verification failure. */
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pisot
