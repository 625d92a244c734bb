#ifndef FMELL_ERRORS_HPP
#define FMELL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fmell {

/// A mathematical precondition or invariant was violated. `clause` names it.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string clause, const std::string& detail)
      : std::runtime_error(clause + ": " + detail), clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

/// Malformed input text. Line and column are 1-based; `context` names the
/// input (an option or file) when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string detail, std::string context = {})
      : std::runtime_error((context.empty() ? std::string() : context + ": ") + "line " +
                           std::to_string(line) + ", column " + std::to_string(column) + ": " +
                           detail),
        line_(line),
        column_(column),
        detail_(std::move(detail)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace fmell

#endif  // FMELL_ERRORS_HPP
