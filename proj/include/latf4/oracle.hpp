#pragma once

// A naive noncommutative Buchberger completion used to cross-check the
// lattice procedure. It deliberately shares nothing with the operator code
// beyond words and polynomials: rules are kept as a plain list of monic
// polynomials, never inter-reduced, and reduction is one rule at a time.

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "latf4/monoid.hpp"
#include "latf4/polynomial.hpp"

namespace latf4::oracle {

  struct RuleSet {
    MonomialOrder           order;
    std::vector<Polynomial> rules;  // monic

    RuleSet(MonomialOrder o, std::span<Polynomial const> polys);
  };

  /// (w1, w2, w3, f, g) with either w1 w2 = lm(f) and w2 w3 = lm(g)
  /// (overlap, w1 and w3 nonempty), or w1 w2 w3 = lm(f) and w2 = lm(g)
  /// (inclusion). The rules are referred to by index.
  struct Ambiguity {
    enum class Kind { overlap, inclusion };

    Kind        kind;
    Word        w1, w2, w3;
    std::size_t f, g;
  };

  [[nodiscard]] std::vector<Ambiguity> ambiguities(RuleSet const& r);

  [[nodiscard]] Polynomial s_polynomial(RuleSet const& r, Ambiguity const& a);

  /// Rewrites the greatest reducible monomial with the first applicable
  /// rule at its leftmost occurrence, until no leading monomial divides any
  /// term.
  [[nodiscard]] Polynomial naive_reduce(RuleSet const& r, Polynomial f);

  struct BuchbergerResult {
    RuleSet basis;
    // true iff no rule was dropped by the degree cap and no pass was cut
    // by the iteration cap: basis is then a Groebner basis.
    bool complete;
  };

  [[nodiscard]] BuchbergerResult buchberger(RuleSet     r,
                                            std::size_t degree_cap,
                                            std::size_t iteration_cap);

  /// Words of length <= d having some leading monomial of r as a factor.
  [[nodiscard]] std::set<Word> lm_set_up_to_degree(RuleSet const& r,
                                                   std::size_t    d);

  struct LeadingIdealComparison {
    bool           agree;
    std::set<Word> only_first;
    std::set<Word> only_second;
  };

  [[nodiscard]] LeadingIdealComparison
  compare_leading_ideals(RuleSet const& a, RuleSet const& b, std::size_t d);

}  // namespace latf4::oracle
