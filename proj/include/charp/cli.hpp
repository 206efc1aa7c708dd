#ifndef CHARP_CLI_HPP
#define CHARP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace charp {

/// Runs one CLI invocation (arguments without the program name) and
/// writes deterministic JSON to `out`, structured errors to `err`.
/// Exit codes: 0 computed, 1 usage or input error, 2 resource bound
/// exceeded, 3 degenerate-input convention applied.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charp

#endif
