#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latf4/monoid.hpp"

namespace latf4 {

  /// Exact rational scalar; always kept in canonical form (reduced fraction,
  /// positive denominator).
  using Scalar = mpq_class;

  // Decimal "p" or "p/q" form, bit-exact round trip with parse_scalar.
  [[nodiscard]] std::string to_string(Scalar const& c);
  [[nodiscard]] std::optional<Scalar> parse_scalar(std::string_view text);

  /// A finite linear combination of words with nonzero rational
  /// coefficients. Terms are kept in increasing monomial order.
  class Polynomial {
   public:
    using term_map = std::map<Word, Scalar>;

    Polynomial() = default;
    explicit Polynomial(Word w, Scalar c = 1);

    [[nodiscard]] bool is_zero() const noexcept {
      return _terms.empty();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _terms.size();
    }
    [[nodiscard]] term_map const& terms() const noexcept {
      return _terms;
    }
    [[nodiscard]] Scalar coefficient(Word const& w) const;
    [[nodiscard]] bool contains(Word const& w) const {
      return _terms.contains(w);
    }
    [[nodiscard]] std::vector<Word> support() const;

    // Throw Error("no leading term") on the zero polynomial.
    [[nodiscard]] Word const&   leading_monomial() const;
    [[nodiscard]] Scalar const& leading_coefficient() const;

    void add_term(Word const& w, Scalar const& c);

    Polynomial& operator+=(Polynomial const& other);
    Polynomial& operator-=(Polynomial const& other);
    Polynomial& operator*=(Scalar const& c);
    // this += c * other
    void add_multiple(Scalar const& c, Polynomial const& other);

    /// left * this * right.
    [[nodiscard]] Polynomial multiply(Word const& left,
                                      Word const& right) const;
    /// This polynomial scaled so that its leading coefficient is 1.
    [[nodiscard]] Polynomial monic() const;

    friend bool operator==(Polynomial const&, Polynomial const&) = default;

   private:
    term_map _terms;
  };

  [[nodiscard]] Polynomial operator+(Polynomial a, Polynomial const& b);
  [[nodiscard]] Polynomial operator-(Polynomial a, Polynomial const& b);
  [[nodiscard]] Polynomial operator-(Polynomial a);
  [[nodiscard]] Polynomial operator*(Scalar const& c, Polynomial a);

  /// (lm(f), lc(f)) for a nonzero f.
  [[nodiscard]] std::pair<Word, Scalar> leading(Polynomial const&   f,
                                                MonomialOrder const& order);

  /// Strict comparison in the order extended to polynomials: 0 is below
  /// every nonzero polynomial, otherwise leading monomials are compared.
  [[nodiscard]] bool extended_less(Polynomial const& f, Polynomial const& g);

}  // namespace latf4
