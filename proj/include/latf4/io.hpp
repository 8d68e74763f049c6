#pragma once

// Text forms of words, polynomials and presentations.
//
// A presentation file looks like
//
//   # comment
//   alphabet: x y z
//   order: deglex
//   rules:
//   y.z -> x
//   z.x -> x.y
//
// Words are symbols joined by '.', or written without separators when every
// symbol is a single character; the empty word is 1. Polynomials are sums
// like "3/2*x.y - y + 2", and 0 is the zero polynomial. Output always uses
// the dotted form.

#include <cstddef>
#include <string>
#include <string_view>

#include "latf4/completion.hpp"
#include "latf4/monoid.hpp"
#include "latf4/polynomial.hpp"
#include "latf4/presentation.hpp"

namespace latf4 {

  [[nodiscard]] std::string format_word(Word const& w, Alphabet const& a);
  [[nodiscard]] std::string format_polynomial(Polynomial const& f,
                                              Alphabet const&   a);
  [[nodiscard]] std::string format_branching(CriticalBranching const& b,
                                             Alphabet const&          a);
  // One "key -> image" line per rule, in increasing key order.
  [[nodiscard]] std::string format_rules(ReductionOperator const& t);

  // line and column locate text inside a larger document in error messages.
  [[nodiscard]] Word parse_word(std::string_view text, Alphabet const& a,
                                std::size_t line = 1, std::size_t column = 1);
  [[nodiscard]] Polynomial parse_polynomial(std::string_view text,
                                            Alphabet const&  a,
                                            std::size_t      line   = 1,
                                            std::size_t      column = 1);

  /// The operator of the result is ker_inv of the rule vectors LHS - RHS,
  /// so user input is inter-reduced into canonical form.
  [[nodiscard]] Presentation parse_presentation(std::string_view text);
  [[nodiscard]] std::string  serialize_presentation(Presentation const& p);

  /// Per-step report of a completion run: branchings, seeds, the
  /// normalised family, and the complement and new operator, each as a
  /// rule map over its ambient word listing.
  [[nodiscard]] std::string format_trace(CompletionResult const& result);

}  // namespace latf4
