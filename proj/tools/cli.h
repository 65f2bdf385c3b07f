#ifndef MATHSEARCH_TOOLS_CLI_H_
#define MATHSEARCH_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace mathsearch::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUserError = 1;
inline constexpr int kStorageError = 2;

// Runs one command. `args` excludes the program name. Results go to `out`,
// warnings and errors to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mathsearch::cli

#endif  // MATHSEARCH_TOOLS_CLI_H_
