#include "latf4/linalg.hpp"

#include <algorithm>

namespace latf4 {

  Echelon::Echelon(std::span<Polynomial const> vectors) {
    for (auto const& v : vectors) {
      insert(v);
    }
  }

  Polynomial Echelon::reduce(Polynomial v) const {
    // Rows contain no pivot other than their own, so subtracting a row never
    // introduces a new pivot word: one pass over the pivots present in v is
    // enough.
    std::vector<Word> pivots;
    for (auto const& [w, c] : v.terms()) {
      if (_rows.contains(w)) {
        pivots.push_back(w);
      }
    }
    for (auto const& p : pivots) {
      Scalar c = v.coefficient(p);
      v.add_multiple(-c, _rows.at(p));
    }
    return v;
  }

  bool Echelon::insert(Polynomial const& v) {
    Polynomial r = reduce(v);
    if (r.is_zero()) {
      return false;
    }
    r = r.monic();
    Word const& pivot = r.leading_monomial();
    for (auto& [w, row] : _rows) {
      Scalar c = row.coefficient(pivot);
      if (c != 0) {
        row.add_multiple(-c, r);
      }
    }
    _rows.emplace(pivot, std::move(r));
    return true;
  }

  Basis Echelon::basis() const {
    Basis out;
    out.reserve(_rows.size());
    for (auto it = _rows.rbegin(); it != _rows.rend(); ++it) {
      out.push_back(it->second);
    }
    return out;
  }

  Basis reduced_basis(std::span<Polynomial const> vectors) {
    return Echelon(vectors).basis();
  }

  Basis subspace_sum(std::span<Polynomial const> a,
                     std::span<Polynomial const> b) {
    Echelon e(a);
    for (auto const& v : b) {
      e.insert(v);
    }
    return e.basis();
  }

  namespace {

    // Given images r_0, ..., r_{k-1}, a basis of the coefficient vectors c
    // with sum c_i r_i = 0, each returned as the combination sum c_i g_i of
    // the generators g.
    Basis combination_kernel(std::span<Polynomial const> generators,
                             std::vector<Polynomial>     images) {
      struct Row {
        Polynomial image;
        Polynomial combination;
      };
      std::map<Word, Row> pivots;
      std::vector<Polynomial> kernel;
      for (std::size_t i = 0; i < images.size(); ++i) {
        Row row{std::move(images[i]), generators[i]};
        while (!row.image.is_zero()) {
          auto it = pivots.find(row.image.leading_monomial());
          if (it == pivots.end()) {
            break;
          }
          Scalar c = row.image.leading_coefficient()
                     / it->second.image.leading_coefficient();
          row.image.add_multiple(-c, it->second.image);
          row.combination.add_multiple(-c, it->second.combination);
        }
        if (row.image.is_zero()) {
          kernel.push_back(std::move(row.combination));
        } else {
          Word lm = row.image.leading_monomial();
          pivots.emplace(std::move(lm), std::move(row));
        }
      }
      return reduced_basis(kernel);
    }

  }  // namespace

  Basis subspace_intersection(std::span<Polynomial const> a,
                              std::span<Polynomial const> b) {
    Basis ra = reduced_basis(a);
    Echelon eb(b);
    // v = sum c_i a_i lies in span(b) iff sum c_i rem(a_i) = 0.
    std::vector<Polynomial> images;
    images.reserve(ra.size());
    for (auto const& v : ra) {
      images.push_back(eb.reduce(v));
    }
    return combination_kernel(ra, std::move(images));
  }

  Basis coordinate_subspace_intersection(std::span<Polynomial const> a,
                                         std::set<Word> const&       allowed) {
    Basis ra = reduced_basis(a);
    std::vector<Polynomial> images;
    images.reserve(ra.size());
    for (auto const& v : ra) {
      Polynomial outside;
      for (auto const& [w, c] : v.terms()) {
        if (!allowed.contains(w)) {
          outside.add_term(w, c);
        }
      }
      images.push_back(std::move(outside));
    }
    return combination_kernel(ra, std::move(images));
  }

  std::set<Word> support_union(std::span<Polynomial const> vectors) {
    std::set<Word> out;
    for (auto const& v : vectors) {
      for (auto const& [w, c] : v.terms()) {
        out.insert(w);
      }
    }
    return out;
  }

}  // namespace latf4
