#pragma once

// Words of the free monoid over a finite ordered alphabet, the deg-lex
// monomial order, and the factor/overlap searches used to enumerate
// critical branchings.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "latf4/error.hpp"

namespace latf4 {

  using letter_type = std::uint32_t;

  /// A finite alphabet. The listing order of the symbols is the base order
  /// x < y < ... used by the monomial order.
  class Alphabet {
   public:
    explicit Alphabet(std::vector<std::string> symbols);

    [[nodiscard]] std::size_t size() const noexcept {
      return _symbols.size();
    }
    [[nodiscard]] std::string const& symbol(letter_type i) const {
      return _symbols.at(i);
    }
    [[nodiscard]] std::vector<std::string> const& symbols() const noexcept {
      return _symbols;
    }
    [[nodiscard]] std::optional<letter_type> find(std::string_view s) const;
    // true iff every symbol is one character long, which allows the
    // undotted word shorthand on input.
    [[nodiscard]] bool single_characters() const noexcept;

    friend bool operator==(Alphabet const& a, Alphabet const& b) {
      return a._symbols == b._symbols;
    }

   private:
    std::vector<std::string>                        _symbols;
    std::unordered_map<std::string, letter_type>    _index;
  };

  /// An element of the free monoid. The empty word is the monomial 1.
  ///
  /// Words compare by length first and then lexicographically on letter
  /// indices, which is the deg-lex order induced by the alphabet listing
  /// order. Every ordered container of words in this library relies on it.
  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<letter_type> letters)
        : _letters(std::move(letters)) {}
    Word(std::initializer_list<letter_type> letters) : _letters(letters) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] letter_type operator[](std::size_t i) const {
      return _letters[i];
    }
    [[nodiscard]] std::span<letter_type const> letters() const noexcept {
      return _letters;
    }

    [[nodiscard]] Word subword(std::size_t pos, std::size_t len) const;
    [[nodiscard]] Word prefix(std::size_t len) const {
      return subword(0, len);
    }
    [[nodiscard]] Word suffix(std::size_t len) const {
      return subword(size() - len, len);
    }
    // true iff u occurs in this word starting at position pos.
    [[nodiscard]] bool has_factor_at(Word const& u, std::size_t pos) const;
    [[nodiscard]] bool contains(Word const& u) const;

    friend bool operator==(Word const&, Word const&) = default;
    friend std::strong_ordering operator<=>(Word const& u, Word const& v);

   private:
    std::vector<letter_type> _letters;
  };

  [[nodiscard]] Word concat(Word const& u, Word const& v);
  [[nodiscard]] Word concat(Word const& u, Word const& v, Word const& w);
  [[nodiscard]] inline Word operator*(Word const& u, Word const& v) {
    return concat(u, v);
  }

  enum class OrderKind { deglex };

  /// A monomial order on the words over a given alphabet. Only deg-lex is
  /// available; it coincides with the intrinsic ordering of Word.
  class MonomialOrder {
   public:
    explicit MonomialOrder(Alphabet base, OrderKind kind = OrderKind::deglex)
        : _base(std::make_shared<Alphabet const>(std::move(base))),
          _kind(kind) {}

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return *_base;
    }
    [[nodiscard]] OrderKind kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] std::strong_ordering compare(Word const& u,
                                               Word const& v) const {
      return u <=> v;
    }
    [[nodiscard]] bool less(Word const& u, Word const& v) const {
      return compare(u, v) < 0;
    }
    // true iff every letter of w belongs to the alphabet.
    [[nodiscard]] bool valid(Word const& w) const noexcept;

    friend bool operator==(MonomialOrder const& a, MonomialOrder const& b) {
      return a._kind == b._kind
             && (a._base == b._base || *a._base == *b._base);
    }

   private:
    std::shared_ptr<Alphabet const> _base;
    OrderKind                       _kind;
  };

  /// Lengths (n, m) of the prefix and suffix around a factor: w = a u b with
  /// |a| = n and |b| = m.
  struct Position {
    std::size_t prefix = 0;
    std::size_t suffix = 0;

    friend bool operator==(Position const&, Position const&) = default;
    friend auto operator<=>(Position const&, Position const&) = default;
  };

  /// All (n, m) with w = a u b, |a| = n, |b| = m, in increasing n.
  [[nodiscard]] std::vector<Position> factor_occurrences(Word const& w,
                                                         Word const& u);

  /// A proper overlap u = prefix.middle and v = middle.suffix.
  struct Overlap {
    Word prefix;
    Word middle;
    Word suffix;

    friend bool operator==(Overlap const&, Overlap const&) = default;
  };

  /// All proper overlaps of a suffix of u with a prefix of v: the middle
  /// part is nonempty and both the prefix and suffix parts are nonempty.
  /// Inclusions, including the trivial self-overlap u = v, are not
  /// overlaps. Listed by increasing length of the middle part.
  [[nodiscard]] std::vector<Overlap> overlaps(Word const& u, Word const& v);

}  // namespace latf4
