#pragma once

// Lattice completion of a presentation by operator.
//
// At step d the S-polynomial legs w - S^d_{n,m}(w) of the new critical
// branchings are turned into a family F_d of single-rule operators
// (normalisation), and the next operator is S^{d+1} = S^d meet C^{F_d},
// where C^{F_d} is the F_d-complement. All S-polynomials of a step are thus
// reduced simultaneously by one Gaussian elimination, as in F4.

#include <cstddef>
#include <span>
#include <vector>

#include "latf4/presentation.hpp"
#include "latf4/reduction_op.hpp"

namespace latf4 {

  struct CompletionLimits {
    std::size_t max_iterations  = 64;
    std::size_t max_rule_degree = 12;
  };

  enum class CompletionStatus { converged, iteration_cap, degree_cap };

  [[nodiscard]] char const* to_string(CompletionStatus s) noexcept;

  struct CompletionStep {
    std::size_t                    index;
    ReductionOperator              operator_before;
    std::vector<CriticalBranching> branchings;      // P_d
    std::vector<CriticalBranching> old_branchings;  // Q_d
    std::vector<Polynomial>        spol_seeds;      // E_d
    OperatorFamily                 normalised_family;  // F_d
    ReductionOperator              complement_op;      // C^{F_d}
    ReductionOperator              operator_after;     // S^{d+1}
  };

  struct CompletionResult {
    Presentation                completed;
    std::vector<CompletionStep> steps;
    CompletionStatus            status;
  };

  /// The family of single-rule operators T(f), f in E, extended by the
  /// one-step reductions by U of the non-leading support words, processed
  /// greatest word first. Duplicate operators are kept once.
  [[nodiscard]] OperatorFamily normalisation(std::span<Polynomial const> seeds,
                                             ReductionOperator const&    u);

  /// Both legs w - S_{left}(w) and w - S_{right}(w) of each branching, with
  /// duplicates removed, in order of first appearance.
  [[nodiscard]] std::vector<Polynomial>
  spol_seeds(ReductionOperator const&             s,
             std::span<CriticalBranching const> branchings);

  [[nodiscard]] CompletionResult complete(Presentation const& pres,
                                          CompletionLimits    limits = {});

  [[nodiscard]] inline ReductionOperator const&
  completed_operator(CompletionResult const& result) noexcept {
    return result.completed.op();
  }

}  // namespace latf4
