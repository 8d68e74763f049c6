#include "latf4/presentation.hpp"

#include <algorithm>
#include <set>

namespace latf4 {

  Presentation::Presentation(ReductionOperator op) : _op(std::move(op)) {
    for (auto const& [w, p] : _op.rules()) {
      if (!_op.order().valid(w)) {
        throw Error("rule key uses a letter outside the alphabet");
      }
      for (auto const& [v, c] : p.terms()) {
        if (!_op.order().valid(v)) {
          throw Error("rule image uses a letter outside the alphabet");
        }
      }
    }
  }

  CriticalBranching canonical(CriticalBranching b) {
    if (b.left < b.right) {
      std::swap(b.left, b.right);
    }
    return b;
  }

  Polynomial extension_apply(ReductionOperator const& s, Position p,
                             Word const& w) {
    if (w.size() < p.prefix + p.suffix) {
      return Polynomial(w);
    }
    auto const mid = w.size() - p.prefix - p.suffix;
    return s.apply(w.subword(p.prefix, mid))
        .multiply(w.prefix(p.prefix), w.suffix(p.suffix));
  }

  std::vector<CriticalBranching>
  critical_branchings(ReductionOperator const& s) {
    std::set<CriticalBranching> found;
    for (auto const& [u, pu] : s.rules()) {
      for (auto const& [v, pv] : s.rules()) {
        if (v.empty()) {
          continue;  // the rule 1 -> 0 takes part in no branching
        }
        for (auto const& o : overlaps(u, v)) {
          found.insert(canonical({concat(o.prefix, o.middle, o.suffix),
                                  {o.prefix.size(), 0},
                                  {0, o.suffix.size()}}));
        }
        for (auto const& pos : factor_occurrences(u, v)) {
          if (pos == Position{0, 0}) {
            continue;  // u == v at the same place: both legs coincide
          }
          found.insert(canonical({u, pos, {0, 0}}));
        }
      }
    }
    return {found.begin(), found.end()};
  }

  Polynomial s_polynomial(ReductionOperator const& s,
                          CriticalBranching const& b) {
    return extension_apply(s, b.left, b.source)
           - extension_apply(s, b.right, b.source);
  }

  std::optional<Redex> find_redex(ReductionOperator const& s, Word const& w) {
    if (s.is_identity()) {
      return std::nullopt;
    }
    auto const max_key = s.rules().rbegin()->first.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto const longest = std::min(max_key, w.size() - i);
      for (std::size_t len = longest; len >= 1; --len) {
        Word key = w.subword(i, len);
        if (s.is_reducible(key)) {
          return Redex{w, std::move(key), {i, w.size() - i - len}};
        }
      }
    }
    // the empty word can be a rule key only in the degenerate ideal
    if (s.is_reducible(Word{})) {
      return Redex{w, Word{}, {0, w.size()}};
    }
    return std::nullopt;
  }

  Polynomial normal_form(ReductionOperator const& s, Polynomial f) {
    while (true) {
      std::optional<Redex> redex;
      Scalar               coeff;
      for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        redex = find_redex(s, it->first);
        if (redex) {
          coeff = it->second;
          break;
        }
      }
      if (!redex) {
        return f;
      }
      auto const& w  = redex->word;
      auto const  pr = w.prefix(redex->position.prefix);
      auto const  su = w.suffix(redex->position.suffix);
      // replace c.w by c.(prefix S(key) suffix)
      Polynomial step = s.apply(redex->key).multiply(pr, su);
      step.add_term(w, -1);
      f.add_multiple(coeff, step);
    }
  }

  bool is_confluent_presentation(Presentation const& pres) {
    for (auto const& b : critical_branchings(pres)) {
      if (!normal_form(pres, s_polynomial(pres, b)).is_zero()) {
        return false;
      }
    }
    return true;
  }

  std::vector<Polynomial> groebner_rules(Presentation const& pres) {
    std::vector<Polynomial> out;
    for (auto const& [w, p] : pres.op().rules()) {
      out.push_back(Polynomial(w) - p);
    }
    return out;
  }

}  // namespace latf4
