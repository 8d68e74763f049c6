#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latf4 {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Raised by the text parsers; line and column are 1-based.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + what),
          _line(line),
          _column(column) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }
    [[nodiscard]] std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace latf4
