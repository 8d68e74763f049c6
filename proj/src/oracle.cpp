#include "latf4/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <tuple>

namespace latf4::oracle {

  namespace {

    // naive quadratic scan
    std::optional<std::size_t> first_occurrence(Word const& w,
                                                Word const& u) {
      if (u.size() > w.size()) {
        return std::nullopt;
      }
      for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < u.size(); ++j) {
          if (w[i + j] != u[j]) {
            match = false;
            break;
          }
        }
        if (match) {
          return i;
        }
      }
      return std::nullopt;
    }

    bool is_irreducible(RuleSet const& r, Word const& w) {
      return std::none_of(r.rules.begin(), r.rules.end(), [&](auto const& g) {
        return first_occurrence(w, g.leading_monomial()).has_value();
      });
    }

  }  // namespace

  RuleSet::RuleSet(MonomialOrder o, std::span<Polynomial const> polys)
      : order(std::move(o)) {
    for (auto const& f : polys) {
      if (!f.is_zero()) {
        rules.push_back(f.monic());
      }
    }
  }

  std::vector<Ambiguity> ambiguities(RuleSet const& r) {
    std::vector<Ambiguity> out;
    for (std::size_t i = 0; i < r.rules.size(); ++i) {
      Word const& u = r.rules[i].leading_monomial();
      for (std::size_t j = 0; j < r.rules.size(); ++j) {
        Word const& v = r.rules[j].leading_monomial();
        if (v.empty()) {
          continue;
        }
        // overlaps: a proper suffix of u equals a proper prefix of v
        for (std::size_t k = 1; k < u.size() && k < v.size(); ++k) {
          if (u.suffix(k) == v.prefix(k)) {
            out.push_back({Ambiguity::Kind::overlap, u.prefix(u.size() - k),
                           v.prefix(k), v.suffix(v.size() - k), i, j});
          }
        }
        // inclusions of v in u
        for (std::size_t n = 0; n + v.size() <= u.size(); ++n) {
          auto const m = u.size() - n - v.size();
          if (i == j && n == 0 && m == 0) {
            continue;
          }
          if (u.subword(n, v.size()) == v) {
            out.push_back({Ambiguity::Kind::inclusion, u.prefix(n), v,
                           u.suffix(m), i, j});
          }
        }
      }
    }
    return out;
  }

  Polynomial s_polynomial(RuleSet const& r, Ambiguity const& a) {
    auto const& f = r.rules[a.f];
    auto const& g = r.rules[a.g];
    if (a.kind == Ambiguity::Kind::overlap) {
      return f.multiply(Word{}, a.w3) - g.multiply(a.w1, Word{});
    }
    return f - g.multiply(a.w1, a.w3);
  }

  Polynomial naive_reduce(RuleSet const& r, Polynomial f) {
    while (true) {
      std::optional<Polynomial> step;
      for (auto it = f.terms().rbegin(); it != f.terms().rend() && !step;
           ++it) {
        Word const& w = it->first;
        for (auto const& g : r.rules) {
          Word const& lm  = g.leading_monomial();
          auto        pos = first_occurrence(w, lm);
          if (pos) {
            auto const m = w.size() - *pos - lm.size();
            step = it->second * g.multiply(w.prefix(*pos), w.suffix(m));
            break;
          }
        }
      }
      if (!step) {
        return f;
      }
      f -= *step;
    }
  }

  BuchbergerResult buchberger(RuleSet r, std::size_t degree_cap,
                              std::size_t iteration_cap) {
    bool       dropped = false;
    // Rules are only ever appended, so an ambiguity keeps its identity
    // across passes and needs to be resolved once.
    using key_type = std::tuple<int, std::size_t, std::size_t, std::size_t>;
    std::set<key_type> done;

    for (std::size_t pass = 0; pass < iteration_cap; ++pass) {
      // Every S-polynomial of a pass is reduced by the rules present at the
      // start of the pass; the survivors are adjoined together at the end.
      std::vector<Polynomial> fresh;
      for (auto const& a : ambiguities(r)) {
        key_type key{static_cast<int>(a.kind), a.f, a.g, a.w1.size()};
        if (!done.insert(key).second) {
          continue;
        }
        Polynomial h = naive_reduce(r, s_polynomial(r, a));
        if (h.is_zero()) {
          continue;
        }
        h = h.monic();
        if (h.leading_monomial().size() > degree_cap) {
          dropped = true;
          continue;
        }
        if (std::find(fresh.begin(), fresh.end(), h) == fresh.end()) {
          fresh.push_back(std::move(h));
        }
      }
      if (fresh.empty()) {
        return {std::move(r), !dropped};
      }
      for (auto& h : fresh) {
        r.rules.push_back(std::move(h));
      }
    }
    return {std::move(r), false};
  }

  std::set<Word> lm_set_up_to_degree(RuleSet const& r, std::size_t d) {
    std::set<Word> out;
    auto const     k = r.order.alphabet().size();
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 0; len <= d; ++len) {
      for (auto const& w : layer) {
        if (!is_irreducible(r, w)) {
          out.insert(w);
        }
      }
      if (len == d) {
        break;
      }
      std::vector<Word> next;
      next.reserve(layer.size() * k);
      for (auto const& w : layer) {
        for (letter_type a = 0; a < k; ++a) {
          next.push_back(concat(w, Word{a}));
        }
      }
      layer = std::move(next);
    }
    return out;
  }

  LeadingIdealComparison compare_leading_ideals(RuleSet const& a,
                                                RuleSet const& b,
                                                std::size_t    d) {
    auto const sa = lm_set_up_to_degree(a, d);
    auto const sb = lm_set_up_to_degree(b, d);
    LeadingIdealComparison out{sa == sb, {}, {}};
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::inserter(out.only_first, out.only_first.end()));
    std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(),
                        std::inserter(out.only_second, out.only_second.end()));
    return out;
  }

}  // namespace latf4::oracle
