#include "latf4/io.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace latf4 {

  namespace {

    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    // Trims text and advances column past the leading blanks.
    std::string_view trim(std::string_view text, std::size_t& column) {
      while (!text.empty() && is_space(text.front())) {
        text.remove_prefix(1);
        ++column;
      }
      while (!text.empty() && is_space(text.back())) {
        text.remove_suffix(1);
      }
      return text;
    }

    bool is_identifier(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      auto head = static_cast<unsigned char>(s.front());
      if (!std::isalpha(head) && s.front() != '_') {
        return false;
      }
      for (char ch : s) {
        auto c = static_cast<unsigned char>(ch);
        if (!std::isalnum(c) && ch != '_') {
          return false;
        }
      }
      return true;
    }

    letter_type lookup(std::string_view sym, Alphabet const& a,
                       std::size_t line, std::size_t column) {
      auto l = a.find(sym);
      if (!l) {
        throw ParseError(line, column,
                         "unknown symbol '" + std::string(sym) + "'");
      }
      return *l;
    }

    std::string format_term(Scalar const& magnitude, Word const& w,
                            Alphabet const& a) {
      if (w.empty()) {
        return to_string(magnitude);
      }
      if (magnitude == 1) {
        return format_word(w, a);
      }
      return to_string(magnitude) + "*" + format_word(w, a);
    }

  }  // namespace

  std::string format_word(Word const& w, Alphabet const& a) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += '.';
      }
      out += a.symbol(w[i]);
    }
    return out;
  }

  std::string format_polynomial(Polynomial const& f, Alphabet const& a) {
    if (f.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
      Scalar const& c = it->second;
      if (first) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      out += format_term(abs(c), it->first, a);
      first = false;
    }
    return out;
  }

  std::string format_branching(CriticalBranching const& b, Alphabet const& a) {
    std::ostringstream os;
    os << '(' << format_word(b.source, a) << ", (" << b.left.prefix << ','
       << b.left.suffix << "), (" << b.right.prefix << ','
       << b.right.suffix << "))";
    return os.str();
  }

  std::string format_rules(ReductionOperator const& t) {
    auto const& a = t.order().alphabet();
    std::string out;
    for (auto const& [w, p] : t.rules()) {
      out += format_word(w, a) + " -> " + format_polynomial(p, a) + "\n";
    }
    return out;
  }

  Word parse_word(std::string_view text, Alphabet const& a, std::size_t line,
                  std::size_t column) {
    text = trim(text, column);
    if (text.empty()) {
      throw ParseError(line, column, "expected a word");
    }
    if (text == "1") {
      return Word{};
    }
    std::vector<letter_type> letters;
    if (text.find('.') != std::string_view::npos) {
      std::size_t start = 0;
      while (true) {
        auto        dot = text.find('.', start);
        auto        sym = text.substr(start, dot - start);
        std::size_t col = column + start;
        sym = trim(sym, col);
        if (sym.empty()) {
          throw ParseError(line, col, "empty symbol in word");
        }
        letters.push_back(lookup(sym, a, line, col));
        if (dot == std::string_view::npos) {
          break;
        }
        start = dot + 1;
      }
    } else if (a.single_characters()) {
      for (std::size_t i = 0; i < text.size(); ++i) {
        letters.push_back(lookup(text.substr(i, 1), a, line, column + i));
      }
    } else {
      letters.push_back(lookup(text, a, line, column));
    }
    return Word(std::move(letters));
  }

  Polynomial parse_polynomial(std::string_view text, Alphabet const& a,
                              std::size_t line, std::size_t column) {
    text = trim(text, column);
    if (text.empty()) {
      throw ParseError(line, column, "expected a polynomial");
    }
    Polynomial  out;
    std::size_t i = 0;
    bool        first = true;
    while (i < text.size()) {
      // sign
      Scalar sign = 1;
      while (i < text.size() && is_space(text[i])) {
        ++i;
      }
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        throw ParseError(line, column + i, "expected '+' or '-'");
      }
      first = false;
      std::size_t end = i;
      while (end < text.size() && text[end] != '+' && text[end] != '-') {
        ++end;
      }
      std::size_t col  = column + i;
      auto        body = trim(text.substr(i, end - i), col);
      if (body.empty()) {
        throw ParseError(line, col, "expected a term");
      }
      Scalar coeff = 1;
      Word   w;
      if (auto star = body.find('*'); star != std::string_view::npos) {
        std::size_t ccol = col;
        auto        ctext = trim(body.substr(0, star), ccol);
        auto        c     = parse_scalar(ctext);
        if (!c) {
          throw ParseError(line, ccol,
                           "malformed rational '" + std::string(ctext) + "'");
        }
        coeff = *c;
        w     = parse_word(body.substr(star + 1), a, line, col + star + 1);
      } else if (std::isdigit(static_cast<unsigned char>(body.front()))) {
        auto c = parse_scalar(body);
        if (!c) {
          throw ParseError(line, col,
                           "malformed rational '" + std::string(body) + "'");
        }
        coeff = *c;
      } else {
        w = parse_word(body, a, line, col);
      }
      out.add_term(w, sign * coeff);
      i = end;
    }
    return out;
  }

  Presentation parse_presentation(std::string_view text) {
    std::optional<Alphabet>  alphabet;
    std::optional<OrderKind> kind;
    bool                     in_rules = false;
    std::vector<Polynomial> vectors;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      auto nl = text.find('\n', pos);
      auto raw = text.substr(pos, nl == std::string_view::npos
                                      ? std::string_view::npos
                                      : nl - pos);
      pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
      ++line_no;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) {
        raw = raw.substr(0, hash);
      }
      if (!raw.empty() && raw.back() == '\r') {
        raw.remove_suffix(1);
      }
      std::size_t col  = 1;
      auto        body = trim(raw, col);
      if (body.empty()) {
        continue;
      }

      if (in_rules) {
        auto arrow = body.find("->");
        if (arrow == std::string_view::npos) {
          throw ParseError(line_no, col, "expected 'LHS -> RHS'");
        }
        Word lhs = parse_word(body.substr(0, arrow), *alphabet, line_no, col);
        Polynomial rhs = parse_polynomial(body.substr(arrow + 2), *alphabet,
                                          line_no, col + arrow + 2);
        Polynomial left(lhs);
        if (!extended_less(rhs, left)) {
          throw ParseError(line_no, col + arrow,
                           "right-hand side is not smaller than the "
                           "left-hand side");
        }
        vectors.push_back(left - rhs);
        continue;
      }

      auto colon = body.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no, col, "expected a 'key:' header line");
      }
      std::size_t vcol  = col + colon + 1;
      auto        key   = body.substr(0, colon);
      auto        value = trim(body.substr(colon + 1), vcol);
      if (key == "alphabet") {
        if (alphabet) {
          throw ParseError(line_no, col, "alphabet given twice");
        }
        std::vector<std::string> symbols;
        std::size_t              i = 0;
        while (i < value.size()) {
          while (i < value.size() && is_space(value[i])) {
            ++i;
          }
          if (i == value.size()) {
            break;
          }
          auto j = i;
          while (j < value.size() && !is_space(value[j])) {
            ++j;
          }
          auto sym = value.substr(i, j - i);
          if (!is_identifier(sym) || sym == "1") {
            throw ParseError(line_no, vcol + i,
                             "invalid symbol '" + std::string(sym) + "'");
          }
          for (auto const& s : symbols) {
            if (s == sym) {
              throw ParseError(line_no, vcol + i,
                               "duplicate symbol '" + std::string(sym) + "'");
            }
          }
          symbols.emplace_back(sym);
          i = j;
        }
        if (symbols.empty()) {
          throw ParseError(line_no, vcol, "empty alphabet");
        }
        alphabet.emplace(std::move(symbols));
      } else if (key == "order") {
        if (value != "deglex") {
          throw ParseError(line_no, vcol,
                           "unknown order kind '" + std::string(value) + "'");
        }
        kind = OrderKind::deglex;
      } else if (key == "rules") {
        if (!alphabet) {
          throw ParseError(line_no, col, "rules before the alphabet line");
        }
        if (!kind) {
          throw ParseError(line_no, col, "rules before the order line");
        }
        if (!value.empty()) {
          throw ParseError(line_no, vcol, "rules start on the next line");
        }
        in_rules = true;
      } else if (key == "status" || key == "iterations"
                 || key == "branchings") {
        // informational lines written by the complete command
      } else {
        throw ParseError(line_no, col,
                         "unknown header '" + std::string(key) + "'");
      }
    }
    if (!alphabet) {
      throw ParseError(line_no, 1, "missing alphabet line");
    }
    if (!kind) {
      throw ParseError(line_no, 1, "missing order line");
    }
    MonomialOrder order(*alphabet, *kind);
    return Presentation(ker_inv(vectors, order));
  }

  std::string serialize_presentation(Presentation const& p) {
    std::string out = "alphabet:";
    for (auto const& s : p.alphabet().symbols()) {
      out += " " + s;
    }
    out += "\norder: deglex\nrules:\n";
    out += format_rules(p.op());
    return out;
  }

  namespace {

    void write_operator(std::ostream& os, ReductionOperator const& t,
                        std::set<Word> const& ambient,
                        std::string const&    indent) {
      auto const& a = t.order().alphabet();
      os << indent << "ambient:";
      bool first = true;
      for (auto const& w : ambient) {
        os << (first ? " " : " < ") << format_word(w, a);
        first = false;
      }
      os << "\n";
      for (auto const& [w, p] : t.rules()) {
        os << indent << format_word(w, a) << " -> " << format_polynomial(p, a)
           << "\n";
      }
    }

  }  // namespace

  std::string format_trace(CompletionResult const& result) {
    std::ostringstream os;
    auto const&        a = result.completed.alphabet();
    for (auto const& step : result.steps) {
      os << "step " << step.index << "\n";
      os << "  operator_before:\n";
      write_operator(os, step.operator_before,
                     step.operator_before.kernel_support(), "    ");
      os << "  branchings:\n";
      for (auto const& b : step.branchings) {
        os << "    " << format_branching(b, a) << "\n";
      }
      os << "  old_branchings:\n";
      for (auto const& b : step.old_branchings) {
        os << "    " << format_branching(b, a) << "\n";
      }
      os << "  seeds:\n";
      for (auto const& f : step.spol_seeds) {
        os << "    " << format_polynomial(f, a) << "\n";
      }
      auto const ambient = support_ambient(step.normalised_family);
      os << "  family:\n";
      for (std::size_t i = 0; i < step.normalised_family.size(); ++i) {
        auto const& t = step.normalised_family[i];
        for (auto const& [w, p] : t.rules()) {
          os << "    [" << i << "] " << format_word(w, a) << " -> "
             << format_polynomial(p, a) << "\n";
        }
      }
      os << "  complement:\n";
      write_operator(os, step.complement_op, ambient, "    ");
      os << "  operator_after:\n";
      write_operator(os, step.operator_after,
                     step.operator_after.kernel_support(), "    ");
    }
    os << "status: " << to_string(result.status) << "\n";
    return os.str();
  }

}  // namespace latf4
