#ifndef M0N_CLI_HPP_
#define M0N_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace m0n::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitOracleDisagreement = 3;

// Entry point of the `m0n` tool. args[0] is the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace m0n::cli

#endif  // M0N_CLI_HPP_
