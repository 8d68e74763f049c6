#include "latf4/polynomial.hpp"

#include <cctype>

namespace latf4 {

  std::string to_string(Scalar const& c) {
    return c.get_str(10);
  }

  std::optional<Scalar> parse_scalar(std::string_view text) {
    // GMP accepts things like "+3" or " 3"; the file format does not.
    if (text.empty()) {
      return std::nullopt;
    }
    auto slash = text.find('/');
    auto digits = [](std::string_view s) {
      if (s.empty()) {
        return false;
      }
      for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
          return false;
        }
      }
      return true;
    };
    auto num = text.substr(0, slash);
    if (!num.empty() && num.front() == '-') {
      num.remove_prefix(1);
    }
    if (!digits(num)) {
      return std::nullopt;
    }
    if (slash != std::string_view::npos) {
      auto den = text.substr(slash + 1);
      if (!digits(den) || den.find_first_not_of('0') == std::string_view::npos) {
        return std::nullopt;
      }
    }
    Scalar c;
    if (c.set_str(std::string(text), 10) != 0) {
      return std::nullopt;
    }
    c.canonicalize();
    return c;
  }

  Polynomial::Polynomial(Word w, Scalar c) {
    if (c != 0) {
      _terms.emplace(std::move(w), std::move(c));
    }
  }

  Scalar Polynomial::coefficient(Word const& w) const {
    auto it = _terms.find(w);
    return it == _terms.end() ? Scalar(0) : it->second;
  }

  std::vector<Word> Polynomial::support() const {
    std::vector<Word> out;
    out.reserve(_terms.size());
    for (auto const& [w, c] : _terms) {
      out.push_back(w);
    }
    return out;
  }

  Word const& Polynomial::leading_monomial() const {
    if (_terms.empty()) {
      throw Error("no leading term");
    }
    return _terms.rbegin()->first;
  }

  Scalar const& Polynomial::leading_coefficient() const {
    if (_terms.empty()) {
      throw Error("no leading term");
    }
    return _terms.rbegin()->second;
  }

  void Polynomial::add_term(Word const& w, Scalar const& c) {
    if (c == 0) {
      return;
    }
    auto [it, inserted] = _terms.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  void Polynomial::add_multiple(Scalar const& c, Polynomial const& other) {
    if (c == 0) {
      return;
    }
    for (auto const& [w, d] : other._terms) {
      add_term(w, c * d);
    }
  }

  Polynomial& Polynomial::operator+=(Polynomial const& other) {
    for (auto const& [w, c] : other._terms) {
      add_term(w, c);
    }
    return *this;
  }

  Polynomial& Polynomial::operator-=(Polynomial const& other) {
    for (auto const& [w, c] : other._terms) {
      add_term(w, -c);
    }
    return *this;
  }

  Polynomial& Polynomial::operator*=(Scalar const& c) {
    if (c == 0) {
      _terms.clear();
      return *this;
    }
    for (auto& [w, d] : _terms) {
      d *= c;
    }
    return *this;
  }

  Polynomial Polynomial::multiply(Word const& left, Word const& right) const {
    Polynomial out;
    // Multiplying by fixed words on both sides preserves the order, so the
    // terms can be appended in sequence.
    for (auto const& [w, c] : _terms) {
      out._terms.emplace_hint(out._terms.end(), concat(left, w, right), c);
    }
    return out;
  }

  Polynomial Polynomial::monic() const {
    Polynomial out = *this;
    out *= Scalar(1) / leading_coefficient();
    return out;
  }

  Polynomial operator+(Polynomial a, Polynomial const& b) {
    a += b;
    return a;
  }

  Polynomial operator-(Polynomial a, Polynomial const& b) {
    a -= b;
    return a;
  }

  Polynomial operator-(Polynomial a) {
    a *= Scalar(-1);
    return a;
  }

  Polynomial operator*(Scalar const& c, Polynomial a) {
    a *= c;
    return a;
  }

  std::pair<Word, Scalar> leading(Polynomial const& f, MonomialOrder const&) {
    return {f.leading_monomial(), f.leading_coefficient()};
  }

  bool extended_less(Polynomial const& f, Polynomial const& g) {
    if (g.is_zero()) {
      return false;
    }
    if (f.is_zero()) {
      return true;
    }
    return f.leading_monomial() < g.leading_monomial();
  }

}  // namespace latf4
