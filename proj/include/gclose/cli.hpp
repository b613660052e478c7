#ifndef GCLOSE_CLI_HPP_
#define GCLOSE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace gclose {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;    // bad flags, unreadable or malformed input
inline constexpr int kExitWeighted = 3; // weighted graph given to a Local-Swaps algorithm
inline constexpr int kExitOracleCap = 4;

/**
 * Runs one command. @p args excludes the program name. Input given as "-"
 * is read from @p in; reports go to @p out, diagnostics to @p err.
 *
 * Subcommands: maximize, evaluate, oracle, gen. Vertex ids in reports and
 * in --group are the 0-based ids of the input file (DIMACS ids minus one);
 * algorithms run on the largest connected component.
 */
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
            std::ostream &err);

} // namespace gclose

#endif // GCLOSE_CLI_HPP_
