#ifndef HYPCERT_CLI_HPP
#define HYPCERT_CLI_HPP

#include <iosfwd>

namespace hypcert {

/// Runs one command line.  Exit codes: 0 success, 1 failed check or
/// certificate, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypcert

#endif
