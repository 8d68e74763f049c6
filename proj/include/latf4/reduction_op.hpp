#pragma once

// Reduction operators on the free algebra and their lattice structure.
//
// A reduction operator T is an idempotent linear map with T(w) <= w for
// every word w. It is determined by its kernel, and is stored as the rule
// map { lg(e) -> lg(e) - e : e in the reduced basis of ker(T) }; every word
// that is not a rule key is fixed. The lattice operations are then computed
// on kernels:
//
//   T1 <= T2   iff ker(T2) is contained in ker(T1)
//   T1 meet T2 has kernel ker(T1) + ker(T2)
//   T1 join T2 has kernel ker(T1) /\ ker(T2)
//
// so that the identity is the top element and meets add rules.

#include <map>
#include <set>
#include <span>
#include <vector>

#include "latf4/linalg.hpp"
#include "latf4/monoid.hpp"
#include "latf4/polynomial.hpp"

namespace latf4 {

  class ReductionOperator {
   public:
    using rule_map = std::map<Word, Polynomial>;

    /// The identity operator.
    explicit ReductionOperator(MonomialOrder order)
        : _order(std::move(order)) {}

    /// The operator whose kernel is spanned by vectors.
    static ReductionOperator from_kernel(std::span<Polynomial const> vectors,
                                         MonomialOrder const&        order);

    [[nodiscard]] MonomialOrder const& order() const noexcept {
      return _order;
    }
    [[nodiscard]] rule_map const& rules() const noexcept {
      return _rules;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _rules.size();
    }
    [[nodiscard]] bool is_identity() const noexcept {
      return _rules.empty();
    }
    [[nodiscard]] bool is_reducible(Word const& w) const {
      return _rules.contains(w);
    }
    /// red(T), in increasing order.
    [[nodiscard]] std::set<Word> reducible_words() const;

    [[nodiscard]] Polynomial apply(Word const& w) const;
    [[nodiscard]] Polynomial apply(Polynomial const& f) const;

    /// Reduced basis of ker(T), sorted by decreasing leading monomial.
    [[nodiscard]] Basis kernel_basis() const;
    /// Words occurring in some kernel vector.
    [[nodiscard]] std::set<Word> kernel_support() const;

    /// Matrix of the restriction to the span of ambient; column j holds the
    /// coordinates of T(ambient[j]). Every rule key and every word of its
    /// image must belong to ambient when the key does.
    [[nodiscard]] std::vector<std::vector<Scalar>>
    matrix(std::set<Word> const& ambient) const;

    friend bool operator==(ReductionOperator const& a,
                           ReductionOperator const& b) {
      return a._order == b._order && a._rules == b._rules;
    }

   private:
    MonomialOrder _order;
    rule_map      _rules;
  };

  using OperatorFamily = std::vector<ReductionOperator>;
  using OrderedAmbient = std::set<Word>;

  [[nodiscard]] ReductionOperator ker_inv(std::span<Polynomial const> vectors,
                                          MonomialOrder const&        order);

  [[nodiscard]] inline Basis kernel_basis(ReductionOperator const& t) {
    return t.kernel_basis();
  }

  [[nodiscard]] inline Polynomial apply(ReductionOperator const& t,
                                        Polynomial const&        f) {
    return t.apply(f);
  }

  /// T(f) = ker_inv(K f): the single rule lm(f) -> lm(f) - f / lc(f).
  [[nodiscard]] ReductionOperator single_rule(Polynomial const&    f,
                                              MonomialOrder const& order);

  [[nodiscard]] bool leq(ReductionOperator const& t1,
                         ReductionOperator const& t2);

  [[nodiscard]] ReductionOperator
  meet(std::span<ReductionOperator const> family);
  [[nodiscard]] ReductionOperator meet(ReductionOperator const& t1,
                                       ReductionOperator const& t2);

  [[nodiscard]] ReductionOperator join(ReductionOperator const& t1,
                                       ReductionOperator const& t2);

  /// Union of the kernel supports of the members of a family.
  [[nodiscard]] OrderedAmbient
  support_ambient(std::span<ReductionOperator const> family);

  /// Words of ambient that are normal forms for every member.
  [[nodiscard]] std::set<Word>
  normal_form_words(std::span<ReductionOperator const> family,
                    OrderedAmbient const&              ambient);

  /// obs(F) = nf(F) \ nf(meet F), restricted to ambient.
  [[nodiscard]] std::set<Word>
  obstructions(std::span<ReductionOperator const> family,
               OrderedAmbient const&              ambient);

  [[nodiscard]] bool
  is_confluent_family(std::span<ReductionOperator const> family);

  /// The F-complement (meet F) join ker_inv(K nf(F)). Its kernel is the set
  /// of vectors of ker(meet F) supported on F-normal forms, which is the
  /// only part of the infinite-dimensional K nf(F) that matters.
  [[nodiscard]] ReductionOperator
  complement(std::span<ReductionOperator const> family);

}  // namespace latf4
