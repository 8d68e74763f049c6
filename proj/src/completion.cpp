#include "latf4/completion.hpp"

#include <algorithm>
#include <iterator>
#include <set>

namespace latf4 {

  char const* to_string(CompletionStatus s) noexcept {
    switch (s) {
      case CompletionStatus::converged:
        return "converged";
      case CompletionStatus::iteration_cap:
        return "iteration_cap";
      case CompletionStatus::degree_cap:
        return "degree_cap";
    }
    return "unknown";
  }

  namespace {

    void add_unique(OperatorFamily& family, ReductionOperator t) {
      if (std::find(family.begin(), family.end(), t) == family.end()) {
        family.push_back(std::move(t));
      }
    }

  }  // namespace

  OperatorFamily normalisation(std::span<Polynomial const> seeds,
                               ReductionOperator const&    u) {
    OperatorFamily family;
    std::set<Word> pending;
    std::set<Word> leading;
    for (auto const& f : seeds) {
      if (f.is_zero()) {
        throw Error("normalisation: zero polynomial in the seed set");
      }
      add_unique(family, single_rule(f, u.order()));
      leading.insert(f.leading_monomial());
      for (auto const& [w, c] : f.terms()) {
        pending.insert(w);
      }
    }
    for (auto const& w : leading) {
      pending.erase(w);
    }
    // Every word added to pending is smaller than the word being processed,
    // so the processed words strictly decrease and the loop terminates.
    while (true) {
      std::optional<Redex> redex;
      for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
        redex = find_redex(u, *it);
        if (redex) {
          break;
        }
      }
      if (!redex) {
        break;
      }
      auto const& w      = redex->word;
      auto const  pre    = w.prefix(redex->position.prefix);
      auto const  suf    = w.suffix(redex->position.suffix);
      Polynomial  image  = u.apply(redex->key).multiply(pre, suf);
      Polynomial  vector = Polynomial(w) - image;
      if (!vector.is_zero()) {
        add_unique(family, single_rule(vector, u.order()));
      }
      pending.erase(w);
      for (auto const& [v, c] : image.terms()) {
        pending.insert(v);
      }
    }
    return family;
  }

  std::vector<Polynomial>
  spol_seeds(ReductionOperator const&             s,
             std::span<CriticalBranching const> branchings) {
    std::vector<Polynomial> out;
    auto push = [&out](Polynomial f) {
      if (!f.is_zero() && std::find(out.begin(), out.end(), f) == out.end()) {
        out.push_back(std::move(f));
      }
    };
    for (auto const& b : branchings) {
      Polynomial w(b.source);
      push(w - extension_apply(s, b.left, b.source));
      push(w - extension_apply(s, b.right, b.source));
    }
    return out;
  }

  CompletionResult complete(Presentation const& pres,
                            CompletionLimits    limits) {
    if (limits.max_iterations == 0 || limits.max_rule_degree == 0) {
      throw Error("completion limits must be positive");
    }
    CompletionResult result{pres, {}, CompletionStatus::converged};

    ReductionOperator              s = pres.op();
    std::vector<CriticalBranching> old;  // Q_d
    auto branchings = critical_branchings(s);  // P_d
    auto seeds      = spol_seeds(s, branchings);

    for (std::size_t d = 0; branchings != old; ++d) {
      if (d >= limits.max_iterations) {
        result.status = CompletionStatus::iteration_cap;
        break;
      }
      auto family = normalisation(seeds, s);
      auto comp   = complement(family);
      auto next   = meet(s, comp);

      bool const too_long = std::any_of(
          next.rules().begin(), next.rules().end(), [&](auto const& rule) {
            return rule.first.size() > limits.max_rule_degree
                   && !s.is_reducible(rule.first);
          });
      if (too_long) {
        result.status = CompletionStatus::degree_cap;
        break;
      }

      result.steps.push_back(CompletionStep{d, s, branchings, old, seeds,
                                            std::move(family), comp, next});

      old = std::move(branchings);
      s   = std::move(next);
      branchings = critical_branchings(s);
      // Q_d is contained in P_d, both sorted
      std::vector<CriticalBranching> fresh;
      std::set_difference(branchings.begin(), branchings.end(), old.begin(),
                          old.end(), std::back_inserter(fresh));
      seeds = spol_seeds(s, fresh);
    }
    result.completed = Presentation(std::move(s));
    return result;
  }

}  // namespace latf4
