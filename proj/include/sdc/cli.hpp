#ifndef SDC_CLI_HPP
#define SDC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sdc::cli {

/// Runs one `sdc` invocation. `args` excludes the program name.
/// Exit codes: 0 success, 1 domain error (JSON on `err`), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdc::cli

#endif
