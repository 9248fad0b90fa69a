#include "sgipsm/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sgipsm {

namespace {

struct Entry {
  std::string value;
  int line = 0;
  int column = 0;  // 1-based column where the value starts
};

const std::map<std::string, std::string>& key_sections() {
  static const std::map<std::string, std::string> keys = {
      {"kind", "problem"},  {"alpha1", "problem"}, {"alpha2", "problem"},         {"beta", "problem"},
      {"gamma", "problem"}, {"delta", "problem"},  {"b", "problem"},              {"f", "problem"},
      {"p", "problem"},     {"g", "problem"},      {"exact", "problem"},          {"n", "discretization"},
      {"alpha", "discretization"},                 {"eval_points", "report"},
  };
  return keys;
}

std::size_t first_non_space(const std::string& s, std::size_t from) {
  while (from < s.size() && (s[from] == ' ' || s[from] == '\t')) ++from;
  return from;
}

std::string rtrim(std::string s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  return s;
}

std::map<std::string, Entry> tokenize(const std::string& text) {
  std::map<std::string, Entry> entries;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const std::size_t comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = rtrim(line);
    const std::size_t start = first_non_space(line, 0);
    if (start == line.size()) continue;

    if (line[start] == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", line_no, static_cast<int>(start) + 1);
      section = line.substr(start + 1, line.size() - start - 2);
      if (section != "problem" && section != "discretization" && section != "report") {
        throw ParseError("unknown section [" + section + "]", line_no, static_cast<int>(start) + 2);
      }
      continue;
    }

    const std::size_t eq = line.find('=', start);
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no, static_cast<int>(start) + 1);
    const std::string key = rtrim(line.substr(start, eq - start));
    const auto known = key_sections().find(key);
    if (key.empty()) throw ParseError("missing key before '='", line_no, static_cast<int>(eq) + 1);
    if (known == key_sections().end()) {
      throw ParseError("unknown key '" + key + "'", line_no, static_cast<int>(start) + 1);
    }
    if (!section.empty() && known->second != section) {
      throw ParseError("key '" + key + "' belongs in [" + known->second + "]", line_no, static_cast<int>(start) + 1);
    }
    if (entries.count(key)) throw ParseError("duplicate key '" + key + "'", line_no, static_cast<int>(start) + 1);
    const std::size_t value_start = first_non_space(line, eq + 1);
    if (value_start == line.size()) throw ParseError("missing value for '" + key + "'", line_no, static_cast<int>(eq) + 2);
    entries[key] = Entry{line.substr(value_start), line_no, static_cast<int>(value_start) + 1};
  }
  return entries;
}

double number(const Entry& e) { return evaluate_constant(e.value, e.line, e.column - 1); }

int integer(const Entry& e, const std::string& key) {
  int v = 0;
  const char* end = e.value.data() + e.value.size();
  const auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError("'" + key + "' must be an integer", e.line, e.column);
  return v;
}

Expression expression(const Entry& e, const std::vector<std::string>& vars) {
  return Expression::parse(e.value, vars, e.line, e.column - 1);
}

// Evaluation errors inside solver callbacks carry x; parse errors carry line/column.
ScalarFn of_x(Expression e) {
  return [e = std::move(e)](double x) { return e(x); };
}

}  // namespace

ProblemConfig parse_config(const std::string& text) {
  const std::map<std::string, Entry> entries = tokenize(text);
  auto require = [&](const std::string& key) -> const Entry& {
    const auto it = entries.find(key);
    if (it == entries.end()) throw ParseError("missing required key '" + key + "'", 1, 1);
    return it->second;
  };
  auto forbid = [&](const std::string& key, const std::string& why) {
    const auto it = entries.find(key);
    if (it != entries.end()) throw ParseError("'" + key + "' " + why, it->second.line, it->second.column);
  };

  ProblemConfig cfg;
  const Entry& kind = require("kind");
  ProblemSpec& spec = cfg.spec;
  spec.alpha1 = number(require("alpha1"));
  spec.alpha2 = number(require("alpha2"));
  spec.beta = number(require("beta"));
  spec.gamma = number(require("gamma"));
  spec.delta = number(require("delta"));
  spec.b = number(require("b"));

  if (kind.value == "nonlinear") {
    forbid("p", "is only valid for kind = linear");
    forbid("g", "is only valid for kind = linear");
    Expression f = expression(require("f"), {"x", "y"});
    spec.term = NonlinearTerm{[f](double x, double y) { return f(x, y); }, {}};
  } else if (kind.value == "linear") {
    forbid("f", "is only valid for kind = nonlinear");
    spec.term = LinearTerm{of_x(expression(require("p"), {"x"})), of_x(expression(require("g"), {"x"}))};
  } else {
    throw ParseError("kind must be 'linear' or 'nonlinear', got '" + kind.value + "'", kind.line, kind.column);
  }

  const Entry& n = require("n");
  cfg.n = integer(n, "n");
  if (cfg.n < 1) throw ParseError("n must be at least 1", n.line, n.column);
  const Entry& alpha = require("alpha");
  cfg.alpha = number(alpha);
  if (!(cfg.alpha > -0.5)) throw ParseError("alpha must exceed -1/2", alpha.line, alpha.column);

  if (const auto it = entries.find("eval_points"); it != entries.end()) {
    cfg.eval_points = integer(it->second, "eval_points");
    if (cfg.eval_points < 2) throw ParseError("eval_points must be at least 2", it->second.line, it->second.column);
  }
  if (const auto it = entries.find("exact"); it != entries.end()) cfg.exact = expression(it->second, {"x"});

  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), require("b").line, 1);
  }
  return cfg;
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace sgipsm
