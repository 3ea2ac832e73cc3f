#ifndef MORIKIT_TOOLS_CLI_HPP
#define MORIKIT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace morikit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResourceCap = 3;
inline constexpr int kExitUnknownCommand = 64;

/**
 * Runs one batch query. Machine-readable output (JSON by default, CSV via
 * --format csv) goes to out; human-readable diagnostics go to err. The
 * MORIKIT_RAY_CAP environment variable overrides the double-description
 * resource cap. Identical invocations produce byte-identical output.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace morikit::cli

#endif
