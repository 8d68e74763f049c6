#include "latf4/monoid.hpp"

#include <algorithm>

namespace latf4 {

  Alphabet::Alphabet(std::vector<std::string> symbols)
      : _symbols(std::move(symbols)) {
    if (_symbols.empty()) {
      throw Error("the alphabet must be nonempty");
    }
    for (letter_type i = 0; i < _symbols.size(); ++i) {
      if (_symbols[i].empty()) {
        throw Error("alphabet symbols must be nonempty");
      }
      if (!_index.emplace(_symbols[i], i).second) {
        throw Error("duplicate alphabet symbol '" + _symbols[i] + "'");
      }
    }
  }

  std::optional<letter_type> Alphabet::find(std::string_view s) const {
    auto it = _index.find(std::string(s));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool Alphabet::single_characters() const noexcept {
    return std::all_of(_symbols.begin(), _symbols.end(), [](auto const& s) {
      return s.size() == 1;
    });
  }

  Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos + len > _letters.size()) {
      throw Error("subword out of range");
    }
    return Word(std::vector<letter_type>(_letters.begin() + pos,
                                         _letters.begin() + pos + len));
  }

  bool Word::has_factor_at(Word const& u, std::size_t pos) const {
    if (pos + u.size() > size()) {
      return false;
    }
    return std::equal(u._letters.begin(), u._letters.end(),
                      _letters.begin() + pos);
  }

  bool Word::contains(Word const& u) const {
    if (u.size() > size()) {
      return false;
    }
    for (std::size_t pos = 0; pos + u.size() <= size(); ++pos) {
      if (has_factor_at(u, pos)) {
        return true;
      }
    }
    return false;
  }

  std::strong_ordering operator<=>(Word const& u, Word const& v) {
    if (auto c = u.size() <=> v.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        u._letters.begin(), u._letters.end(), v._letters.begin(),
        v._letters.end());
  }

  Word concat(Word const& u, Word const& v) {
    std::vector<letter_type> out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u.letters().begin(), u.letters().end());
    out.insert(out.end(), v.letters().begin(), v.letters().end());
    return Word(std::move(out));
  }

  Word concat(Word const& u, Word const& v, Word const& w) {
    std::vector<letter_type> out;
    out.reserve(u.size() + v.size() + w.size());
    out.insert(out.end(), u.letters().begin(), u.letters().end());
    out.insert(out.end(), v.letters().begin(), v.letters().end());
    out.insert(out.end(), w.letters().begin(), w.letters().end());
    return Word(std::move(out));
  }

  bool MonomialOrder::valid(Word const& w) const noexcept {
    auto const n = _base->size();
    return std::all_of(w.letters().begin(), w.letters().end(),
                       [n](letter_type a) { return a < n; });
  }

  std::vector<Position> factor_occurrences(Word const& w, Word const& u) {
    if (u.empty()) {
      throw Error("factor_occurrences: the factor must be nonempty");
    }
    std::vector<Position> out;
    for (std::size_t n = 0; n + u.size() <= w.size(); ++n) {
      if (w.has_factor_at(u, n)) {
        out.push_back({n, w.size() - n - u.size()});
      }
    }
    return out;
  }

  std::vector<Overlap> overlaps(Word const& u, Word const& v) {
    std::vector<Overlap> out;
    // the middle part is a proper suffix of u and a proper prefix of v
    auto const max_len = std::min(u.size(), v.size());
    for (std::size_t len = 1; len <= max_len; ++len) {
      if (len == u.size() || len == v.size()) {
        continue;
      }
      if (v.has_factor_at(u.suffix(len), 0)) {
        out.push_back({u.prefix(u.size() - len), v.prefix(len),
                       v.suffix(v.size() - len)});
      }
    }
    return out;
  }

}  // namespace latf4
