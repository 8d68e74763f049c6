#pragma once

// Helpers shared by the test suites: compact word/polynomial literals over
// x < y < z, the braided-monoid presentation, and random generators.

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "latf4/io.hpp"
#include "latf4/monoid.hpp"
#include "latf4/polynomial.hpp"
#include "latf4/presentation.hpp"
#include "latf4/reduction_op.hpp"

namespace latf4::test {

  inline Alphabet const& xyz() {
    static Alphabet const a({"x", "y", "z"});
    return a;
  }

  inline MonomialOrder const& deglex() {
    static MonomialOrder const o(xyz());
    return o;
  }

  inline Word w(std::string_view s) {
    return parse_word(s, xyz());
  }

  inline Polynomial p(std::string_view s) {
    return parse_polynomial(s, xyz());
  }

  inline std::string str(Polynomial const& f) {
    return format_polynomial(f, xyz());
  }

  inline std::string str(Word const& u) {
    return format_word(u, xyz());
  }

  inline ReductionOperator op(std::vector<std::string_view> const& kernel) {
    std::vector<Polynomial> vs;
    for (auto s : kernel) {
      vs.push_back(p(s));
    }
    return ker_inv(vs, deglex());
  }

  // Rules as "key -> image" strings, in key order.
  inline std::vector<std::string> rules(ReductionOperator const& t) {
    std::vector<std::string> out;
    for (auto const& [k, v] : t.rules()) {
      out.push_back(str(k) + " -> " + str(v));
    }
    return out;
  }

  inline char const* braided_text() {
    return "alphabet: x y z\n"
           "order: deglex\n"
           "rules:\n"
           "yz -> x\n"
           "zx -> xy\n";
  }

  inline Presentation braided() {
    return parse_presentation(braided_text());
  }

  inline std::vector<std::string> const& braided_completed_rules() {
    static std::vector<std::string> const r{
        "y.z -> x", "z.x -> x.y", "y.x.x -> x.x.z", "y.x.y -> x.x",
        "y.x.x.x -> x.x.x.y"};
    return r;
  }

  class Random {
   public:
    explicit Random(std::uint64_t seed) : _gen(seed) {}

    std::size_t uniform(std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(_gen);
    }

    bool coin(double p = 0.5) {
      return std::bernoulli_distribution(p)(_gen);
    }

    Word word(std::size_t letters, std::size_t min_len, std::size_t max_len) {
      std::vector<letter_type> out(uniform(min_len, max_len));
      for (auto& a : out) {
        a = static_cast<letter_type>(uniform(0, letters - 1));
      }
      return Word(std::move(out));
    }

    Scalar small_scalar(bool nonzero = true) {
      while (true) {
        long num = static_cast<long>(uniform(0, 6)) - 3;
        long den = static_cast<long>(uniform(1, 3));
        if (nonzero && num == 0) {
          continue;
        }
        Scalar c(num, den);
        c.canonicalize();
        return c;
      }
    }

    // A random vector supported on a subset of ambient.
    Polynomial vector_over(std::vector<Word> const& ambient,
                           double density = 0.4) {
      Polynomial f;
      for (auto const& u : ambient) {
        if (coin(density)) {
          f.add_term(u, small_scalar());
        }
      }
      return f;
    }

    // All words of length 1..3 over {x, y}, shuffled, first n kept.
    std::vector<Word> ambient(std::size_t n) {
      std::vector<Word> all;
      for (std::size_t len = 1; len <= 3; ++len) {
        for (std::size_t code = 0; code < (1u << len); ++code) {
          std::vector<letter_type> ls;
          for (std::size_t i = 0; i < len; ++i) {
            ls.push_back(static_cast<letter_type>((code >> i) & 1u));
          }
          all.emplace_back(std::move(ls));
        }
      }
      std::shuffle(all.begin(), all.end(), _gen);
      all.resize(std::min(n, all.size()));
      return all;
    }

    ReductionOperator operator_over(std::vector<Word> const& ambient,
                                    std::size_t max_vectors = 4) {
      std::vector<Polynomial> vs;
      auto const              k = uniform(0, max_vectors);
      for (std::size_t i = 0; i < k; ++i) {
        vs.push_back(vector_over(ambient));
      }
      return ker_inv(vs, deglex());
    }

    // A presentation with at most max_rules rules whose keys have length
    // 1..max_key over the first `letters` symbols, each rule mapping the key
    // to a combination of smaller words.
    Presentation presentation(std::size_t letters, std::size_t max_rules,
                              std::size_t max_key) {
      std::vector<Polynomial> vs;
      auto const              k = uniform(1, max_rules);
      for (std::size_t i = 0; i < k; ++i) {
        Word       key = word(letters, 1, max_key);
        Polynomial f(key);
        auto const terms = uniform(0, 2);
        for (std::size_t t = 0; t < terms; ++t) {
          Word smaller = word(letters, 0, key.size());
          if (smaller < key) {
            f.add_term(smaller, small_scalar());
          }
        }
        vs.push_back(f);
      }
      return Presentation(ker_inv(vs, deglex()));
    }

    std::mt19937_64& engine() {
      return _gen;
    }

   private:
    std::mt19937_64 _gen;
  };

}  // namespace latf4::test
