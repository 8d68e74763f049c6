#pragma once

#include <optional>
#include <span>
#include <vector>

#include "latf4/monoid.hpp"
#include "latf4/polynomial.hpp"
#include "latf4/reduction_op.hpp"

namespace latf4 {

  /// A presentation by operator (X, <, S) of the algebra K<X*> / I(ker S).
  class Presentation {
   public:
    explicit Presentation(ReductionOperator op);

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _op.order().alphabet();
    }
    [[nodiscard]] MonomialOrder const& order() const noexcept {
      return _op.order();
    }
    [[nodiscard]] ReductionOperator const& op() const noexcept {
      return _op;
    }

    friend bool operator==(Presentation const&, Presentation const&)
        = default;

   private:
    ReductionOperator _op;
  };

  /// A critical branching (w, (n, m), (n', m')). The unordered pair of
  /// positions is stored with the lexicographically greater one on the
  /// left, so that an overlap u = ab, v = bc is (abc, (|a|, 0), (0, |c|))
  /// and an inclusion of v in u at (n, m) is (u, (n, m), (0, 0)).
  struct CriticalBranching {
    Word     source;
    Position left;
    Position right;

    friend bool operator==(CriticalBranching const&, CriticalBranching const&)
        = default;
    friend auto operator<=>(CriticalBranching const&,
                            CriticalBranching const&) = default;
  };

  /// Puts the positions of b in canonical orientation.
  [[nodiscard]] CriticalBranching canonical(CriticalBranching b);

  /// S_{n,m}(w) = w1 S(w2) w3 with |w1| = n and |w3| = m; w itself when w is
  /// shorter than n + m.
  [[nodiscard]] Polynomial extension_apply(ReductionOperator const& s,
                                           Position p, Word const& w);
  [[nodiscard]] inline Polynomial extension_apply(Presentation const& pres,
                                                  Position p, Word const& w) {
    return extension_apply(pres.op(), p, w);
  }

  /// All critical branchings, sorted by source and then by positions.
  [[nodiscard]] std::vector<CriticalBranching>
  critical_branchings(ReductionOperator const& s);
  [[nodiscard]] inline std::vector<CriticalBranching>
  critical_branchings(Presentation const& pres) {
    return critical_branchings(pres.op());
  }

  /// SP(b) = S_{left}(w) - S_{right}(w).
  [[nodiscard]] Polynomial s_polynomial(ReductionOperator const& s,
                                        CriticalBranching const& b);
  [[nodiscard]] inline Polynomial s_polynomial(Presentation const&      pres,
                                               CriticalBranching const& b) {
    return s_polynomial(pres.op(), b);
  }

  /// A single rewriting site: word = prefix . key . suffix.
  struct Redex {
    Word     word;
    Word     key;
    Position position;
  };

  /// The leftmost occurrence of a rule key in w, choosing the longest key
  /// at that position.
  [[nodiscard]] std::optional<Redex> find_redex(ReductionOperator const& s,
                                                Word const&              w);

  /// Normal form by rewriting with all extensions S_{n,m}: at each step the
  /// greatest reducible monomial is rewritten at its leftmost-longest redex.
  [[nodiscard]] Polynomial normal_form(ReductionOperator const& s,
                                       Polynomial               f);
  [[nodiscard]] inline Polynomial normal_form(Presentation const& pres,
                                              Polynomial          f) {
    return normal_form(pres.op(), std::move(f));
  }

  /// Every S-polynomial reduces to zero.
  [[nodiscard]] bool is_confluent_presentation(Presentation const& pres);

  /// { w - S(w) : w in red(S) }, sorted by increasing leading monomial.
  [[nodiscard]] std::vector<Polynomial>
  groebner_rules(Presentation const& pres);

}  // namespace latf4
