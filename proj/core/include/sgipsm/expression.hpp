#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgipsm {

/// Malformed expression or config text. line and column are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, int line, int column);

  [[nodiscard]] int line() const noexcept { return line_; }
  [[nodiscard]] int column() const noexcept { return column_; }
  [[nodiscard]] const std::string& message() const noexcept { return message_; }

private:
  std::string message_;
  int line_;
  int column_;
};

/// Evaluation produced a non-finite value (log of a nonpositive number,
/// division by zero, ...).
class DomainError : public std::runtime_error {
public:
  DomainError(const std::string& message, double x);

  [[nodiscard]] double x() const noexcept { return x_; }

private:
  double x_;
};

/// Arithmetic expression in x and y.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' unary)?          right-associative
///   primary := number | 'pi' | variable | name '(' expr (',' expr)* ')' | '(' expr ')'
///
/// Functions: sin cos tan exp log sqrt sinh cosh abs, pow(a, b), and
/// sinhc(z) = sinh(z)/z with sinhc(0) = 1.
class Expression {
public:
  struct Node;

  /// Parses `text`; identifiers other than pi and the listed variables are
  /// rejected. `line` and `column_offset` place reported positions inside a
  /// larger document.
  static Expression parse(const std::string& text, const std::vector<std::string>& variables = {"x", "y"},
                          int line = 1, int column_offset = 0);

  /// Throws DomainError, reporting x, when the result is not finite.
  [[nodiscard]] double operator()(double x, double y = 0.0) const;

  [[nodiscard]] const std::string& text() const noexcept { return text_; }
  [[nodiscard]] bool uses(const std::string& variable) const;

private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

/// sinh(z)/z, continued by 1 at z = 0.
double sinhc(double z);

/// Parses and evaluates an expression with no variables, e.g. "sqrt(3)/2".
double evaluate_constant(const std::string& text, int line = 1, int column_offset = 0);

}  // namespace sgipsm
