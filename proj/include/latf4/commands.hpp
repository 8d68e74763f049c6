#pragma once

// The command-line entry points, operating on the text of a presentation
// file. Each returns the process exit code: 0 for success or a positive
// answer, 1 for a negative answer, 2 for usage or parse errors.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "latf4/completion.hpp"

namespace latf4 {

  enum exit_code : int { exit_ok = 0, exit_negative = 1, exit_usage = 2 };

  /// Prints the completed presentation with status, iteration and branching
  /// count lines. If trace is non-null it receives the per-step report.
  int cmd_complete(std::string_view text, CompletionLimits limits,
                   std::string* trace, std::ostream& out, std::ostream& err);

  /// Lists every critical branching with its S-polynomial and the normal
  /// form of the latter; exit 0 iff all normal forms vanish.
  int cmd_check(std::string_view text, std::ostream& out, std::ostream& err);

  int cmd_reduce(std::string_view text, std::string_view polynomial,
                 std::ostream& out, std::ostream& err);

  int cmd_branchings(std::string_view text, std::ostream& out,
                     std::ostream& err);

  /// Runs the lattice completion and the Buchberger oracle with the same
  /// degree cap and compares their leading-monomial ideals up to that
  /// degree. Prints AGREE, DISAGREE (with witnesses) or INCONCLUSIVE.
  int cmd_oracle(std::string_view text, std::size_t max_degree,
                 std::size_t max_iterations, std::ostream& out,
                 std::ostream& err);

}  // namespace latf4
