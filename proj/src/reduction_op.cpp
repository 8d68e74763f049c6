#include "latf4/reduction_op.hpp"

namespace latf4 {

  ReductionOperator
  ReductionOperator::from_kernel(std::span<Polynomial const> vectors,
                                 MonomialOrder const&        order) {
    ReductionOperator t(order);
    Echelon           e(vectors);
    for (auto const& [pivot, row] : e.rows()) {
      if (!order.valid(pivot)) {
        throw Error("kernel vector uses a letter outside the alphabet");
      }
      t._rules.emplace(pivot, Polynomial(pivot) - row);
    }
    return t;
  }

  std::set<Word> ReductionOperator::reducible_words() const {
    std::set<Word> out;
    for (auto const& [w, p] : _rules) {
      out.insert(out.end(), w);
    }
    return out;
  }

  Polynomial ReductionOperator::apply(Word const& w) const {
    auto it = _rules.find(w);
    return it == _rules.end() ? Polynomial(w) : it->second;
  }

  Polynomial ReductionOperator::apply(Polynomial const& f) const {
    Polynomial out;
    for (auto const& [w, c] : f.terms()) {
      auto it = _rules.find(w);
      if (it == _rules.end()) {
        out.add_term(w, c);
      } else {
        out.add_multiple(c, it->second);
      }
    }
    return out;
  }

  Basis ReductionOperator::kernel_basis() const {
    Basis out;
    out.reserve(_rules.size());
    for (auto it = _rules.rbegin(); it != _rules.rend(); ++it) {
      out.push_back(Polynomial(it->first) - it->second);
    }
    return out;
  }

  std::set<Word> ReductionOperator::kernel_support() const {
    std::set<Word> out;
    for (auto const& [w, p] : _rules) {
      out.insert(w);
      for (auto const& [v, c] : p.terms()) {
        out.insert(v);
      }
    }
    return out;
  }

  std::vector<std::vector<Scalar>>
  ReductionOperator::matrix(std::set<Word> const& ambient) const {
    std::vector<Word> words(ambient.begin(), ambient.end());
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) {
      index.emplace(words[i], i);
    }
    std::vector<std::vector<Scalar>> m(
        words.size(), std::vector<Scalar>(words.size(), Scalar(0)));
    for (std::size_t j = 0; j < words.size(); ++j) {
      auto const image = apply(words[j]);
      for (auto const& [w, c] : image.terms()) {
        auto it = index.find(w);
        if (it == index.end()) {
          throw Error("the ambient is not stable under the operator");
        }
        m[it->second][j] = c;
      }
    }
    return m;
  }

  ReductionOperator ker_inv(std::span<Polynomial const> vectors,
                            MonomialOrder const&        order) {
    return ReductionOperator::from_kernel(vectors, order);
  }

  ReductionOperator single_rule(Polynomial const&    f,
                                MonomialOrder const& order) {
    if (f.is_zero()) {
      throw Error("single_rule: the zero polynomial has no leading term");
    }
    return ker_inv(std::span(&f, 1), order);
  }

  bool leq(ReductionOperator const& t1, ReductionOperator const& t2) {
    if (!(t1.order() == t2.order())) {
      throw Error("leq: operators relative to different orders");
    }
    for (auto const& v : t2.kernel_basis()) {
      if (!t1.apply(v).is_zero()) {
        return false;
      }
    }
    return true;
  }

  ReductionOperator meet(std::span<ReductionOperator const> family) {
    if (family.empty()) {
      throw Error("meet: empty family");
    }
    Echelon e;
    for (auto const& t : family) {
      if (!(t.order() == family.front().order())) {
        throw Error("meet: operators relative to different orders");
      }
      for (auto const& v : t.kernel_basis()) {
        e.insert(v);
      }
    }
    auto basis = e.basis();
    return ker_inv(basis, family.front().order());
  }

  ReductionOperator meet(ReductionOperator const& t1,
                         ReductionOperator const& t2) {
    std::vector<ReductionOperator> f{t1, t2};
    return meet(f);
  }

  ReductionOperator join(ReductionOperator const& t1,
                         ReductionOperator const& t2) {
    if (!(t1.order() == t2.order())) {
      throw Error("join: operators relative to different orders");
    }
    return ker_inv(subspace_intersection(t1.kernel_basis(), t2.kernel_basis()),
                   t1.order());
  }

  OrderedAmbient support_ambient(std::span<ReductionOperator const> family) {
    OrderedAmbient out;
    for (auto const& t : family) {
      out.merge(t.kernel_support());
    }
    return out;
  }

  std::set<Word> normal_form_words(std::span<ReductionOperator const> family,
                                   OrderedAmbient const& ambient) {
    std::set<Word> out;
    for (auto const& w : ambient) {
      bool nf = true;
      for (auto const& t : family) {
        if (t.is_reducible(w)) {
          nf = false;
          break;
        }
      }
      if (nf) {
        out.insert(out.end(), w);
      }
    }
    return out;
  }

  std::set<Word> obstructions(std::span<ReductionOperator const> family,
                              OrderedAmbient const&              ambient) {
    auto const lower = meet(family);
    std::set<Word> out;
    for (auto const& w : normal_form_words(family, ambient)) {
      if (lower.is_reducible(w)) {
        out.insert(out.end(), w);
      }
    }
    return out;
  }

  bool is_confluent_family(std::span<ReductionOperator const> family) {
    if (family.empty()) {
      return true;
    }
    return obstructions(family, support_ambient(family)).empty();
  }

  ReductionOperator complement(std::span<ReductionOperator const> family) {
    if (family.empty()) {
      throw Error("complement: empty family");
    }
    auto const lower   = meet(family);
    auto const kernel  = lower.kernel_basis();
    auto const allowed = normal_form_words(family, support_union(kernel));
    return ker_inv(coordinate_subspace_intersection(kernel, allowed),
                   lower.order());
  }

}  // namespace latf4
