#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surfpack {

/// Command-line entry point. `args` excludes the program name. Returns 0 on
/// success, 1 on a usage error and 2 on a runtime error (bad input, limits,
/// or a packing that fails validation).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace surfpack
