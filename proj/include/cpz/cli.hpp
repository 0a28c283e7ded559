#ifndef CPZ_CLI_HPP
#define CPZ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cpz
{

/// Entry point of the `cpz` tool; args excludes the program name.
/// Returns 0 on success, 1 on usage, shape or validation errors and 2 on I/O
/// errors. Messages go to err.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cpz

#endif
