#pragma once

// Exact Gaussian elimination on sparse vectors indexed by words: reduced
// bases of subspaces, and the sum and intersection of subspaces.

#include <map>
#include <set>
#include <span>
#include <vector>

#include "latf4/polynomial.hpp"

namespace latf4 {

  /// The reduced basis of a subspace: monic vectors with pairwise distinct
  /// leading monomials, no leading monomial occurring in another vector,
  /// sorted by decreasing leading monomial.
  using Basis = std::vector<Polynomial>;

  /// Incremental reduced row echelon form, keyed by pivot (leading) word.
  class Echelon {
   public:
    Echelon() = default;
    explicit Echelon(std::span<Polynomial const> vectors);

    // Returns false if v was already in the span (zero vectors included).
    bool insert(Polynomial const& v);
    // The remainder of v modulo the span; it contains no pivot word.
    [[nodiscard]] Polynomial reduce(Polynomial v) const;
    [[nodiscard]] bool contains(Polynomial const& v) const {
      return reduce(v).is_zero();
    }
    [[nodiscard]] std::size_t dimension() const noexcept {
      return _rows.size();
    }
    [[nodiscard]] std::map<Word, Polynomial> const& rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] Basis basis() const;

   private:
    std::map<Word, Polynomial> _rows;
  };

  [[nodiscard]] Basis reduced_basis(std::span<Polynomial const> vectors);

  [[nodiscard]] Basis subspace_sum(std::span<Polynomial const> a,
                                   std::span<Polynomial const> b);

  [[nodiscard]] Basis subspace_intersection(std::span<Polynomial const> a,
                                            std::span<Polynomial const> b);

  /// Reduced basis of { v in span(a) : supp(v) is contained in allowed }.
  [[nodiscard]] Basis
  coordinate_subspace_intersection(std::span<Polynomial const> a,
                                   std::set<Word> const&       allowed);

  /// The union of the supports of the given vectors.
  [[nodiscard]] std::set<Word>
  support_union(std::span<Polynomial const> vectors);

}  // namespace latf4
