#include "sgipsm/expression.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace sgipsm {

namespace {

std::string located(const std::string& message, int line, int column) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << message;
  return os.str();
}

std::string at_x(const std::string& message, double x) {
  std::ostringstream os;
  os.precision(17);
  os << message << " at x = " << x;
  return os.str();
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(located(message, line, column)), message_(message), line_(line), column_(column) {}

DomainError::DomainError(const std::string& message, double x) : std::runtime_error(at_x(message, x)), x_(x) {}

double sinhc(double z) { return z == 0.0 ? 1.0 : std::sinh(z) / z; }

struct Expression::Node {
  enum class Kind { Number, Variable, Negate, Binary, Call };
  Kind kind = Kind::Number;
  double value = 0.0;
  int variable = 0;  // 0 -> x, 1 -> y
  char op = 0;
  std::string name;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

struct UnaryFunction {
  const char* name;
  double (*fn)(double);
};

const UnaryFunction kUnary[] = {
    {"sin", [](double v) { return std::sin(v); }},   {"cos", [](double v) { return std::cos(v); }},
    {"tan", [](double v) { return std::tan(v); }},   {"exp", [](double v) { return std::exp(v); }},
    {"log", [](double v) { return std::log(v); }},   {"sqrt", [](double v) { return std::sqrt(v); }},
    {"sinh", [](double v) { return std::sinh(v); }}, {"cosh", [](double v) { return std::cosh(v); }},
    {"abs", [](double v) { return std::abs(v); }},   {"sinhc", sinhc},
};

const UnaryFunction* find_unary(const std::string& name) {
  for (const auto& f : kUnary) {
    if (name == f.name) return &f;
  }
  return nullptr;
}

class Parser {
public:
  Parser(const std::string& text, const std::vector<std::string>& variables, int line, int column_offset)
      : text_(text), variables_(variables), line_(line), offset_(column_offset) {}

  NodePtr parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    NodePtr root = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return root;
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, offset_ + static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ == text_.size()) fail(std::string("expected '") + c + "' before end of expression");
      fail(std::string("expected '") + c + "'");
    }
  }

  static NodePtr binary(char op, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Binary;
    n->op = op;
    n->args = {std::move(lhs), std::move(rhs)};
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = binary('+', lhs, term());
      } else if (accept('-')) {
        lhs = binary('-', lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = binary('*', lhs, unary());
      } else if (accept('/')) {
        lhs = binary('/', lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Negate;
      n->args = {unary()};
      return n;
    }
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return binary('^', base, unary());
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (accept('(')) {
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  NodePtr number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    auto n = std::make_shared<Node>();
    n->value = value;
    return n;
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    const std::string name = text_.substr(start, pos_ - start);

    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      const std::size_t name_pos = start;
      ++pos_;
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Call;
      n->name = name;
      n->args.push_back(expr());
      while (accept(',')) n->args.push_back(expr());
      expect(')');
      const std::size_t arity = name == "pow" ? 2 : 1;
      if (name != "pow" && !find_unary(name)) {
        pos_ = name_pos;
        fail("unknown function '" + name + "'");
      }
      if (n->args.size() != arity) {
        pos_ = name_pos;
        std::ostringstream os;
        os << "function '" << name << "' takes " << arity << " argument" << (arity == 1 ? "" : "s") << ", got "
           << n->args.size();
        fail(os.str());
      }
      return n;
    }

    auto n = std::make_shared<Node>();
    if (name == "pi") {
      n->value = std::numbers::pi;
      return n;
    }
    const auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end() || (name != "x" && name != "y")) {
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    n->kind = Node::Kind::Variable;
    n->variable = name == "x" ? 0 : 1;
    return n;
  }

  const std::string& text_;
  const std::vector<std::string>& variables_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

double eval(const Node& n, double x, double y) {
  switch (n.kind) {
    case Node::Kind::Number:
      return n.value;
    case Node::Kind::Variable:
      return n.variable == 0 ? x : y;
    case Node::Kind::Negate:
      return -eval(*n.args[0], x, y);
    case Node::Kind::Binary: {
      const double a = eval(*n.args[0], x, y);
      const double b = eval(*n.args[1], x, y);
      switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/':
          if (b == 0.0) throw DomainError("division by zero", x);
          return a / b;
        default: {
          const double r = std::pow(a, b);
          if (!std::isfinite(r)) throw DomainError("'^' is undefined for these operands", x);
          return r;
        }
      }
    }
    case Node::Kind::Call: {
      double r;
      if (n.name == "pow") {
        r = std::pow(eval(*n.args[0], x, y), eval(*n.args[1], x, y));
      } else {
        r = find_unary(n.name)->fn(eval(*n.args[0], x, y));
      }
      if (!std::isfinite(r)) throw DomainError("'" + n.name + "' is undefined for its argument", x);
      return r;
    }
  }
  return 0.0;
}

bool mentions(const Node& n, int variable) {
  if (n.kind == Node::Kind::Variable) return n.variable == variable;
  return std::any_of(n.args.begin(), n.args.end(), [&](const NodePtr& a) { return mentions(*a, variable); });
}

}  // namespace

Expression Expression::parse(const std::string& text, const std::vector<std::string>& variables, int line,
                             int column_offset) {
  Expression e;
  e.root_ = Parser(text, variables, line, column_offset).parse();
  e.text_ = text;
  return e;
}

double Expression::operator()(double x, double y) const {
  const double r = eval(*root_, x, y);
  if (!std::isfinite(r)) throw DomainError("expression '" + text_ + "' is not finite", x);
  return r;
}

bool Expression::uses(const std::string& variable) const {
  if (variable != "x" && variable != "y") return false;
  return mentions(*root_, variable == "x" ? 0 : 1);
}

double evaluate_constant(const std::string& text, int line, int column_offset) {
  return Expression::parse(text, {}, line, column_offset)(0.0);
}

}  // namespace sgipsm
