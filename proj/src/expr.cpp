// Copyright 2026 The reachpipe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reachpipe/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "lexer.hpp"
#include "reachpipe/error.hpp"

namespace reachpipe {
namespace detail {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
  }
  return true;
}

bool parse_number(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  std::string buf(s);
  // strtod accepts hex, inf and nan; only plain decimals are wanted here.
  for (char c : buf) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'E' ||
          c == '+' || c == '-')) {
      return false;
    }
  }
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || !std::isfinite(v)) return false;
  out = v;
  return true;
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::pair<std::string_view, std::size_t>> split_top(std::string_view text, char sep,
                                                                 std::size_t base_offset) {
  std::vector<std::pair<std::string_view, std::size_t>> parts;
  int depth = 0;
  std::size_t start = 0;
  auto push = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
    parts.emplace_back(trim(piece), base_offset + start + lead);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == sep && depth == 0) {
      push(i);
      start = i + 1;
    }
  }
  push(text.size());
  return parts;
}

std::vector<Token> tokenize(std::string_view text, std::size_t base_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.offset = base_offset + i;
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && text[j] == '.') {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
          while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
          j = k;
        }
      }
      t.kind = Token::Kind::kNumber;
      t.text = std::string(text.substr(i, j - i));
      if (!parse_number(t.text, t.number)) {
        throw SyntaxError("malformed number '" + t.text + "' at offset " +
                              std::to_string(t.offset),
                          t.offset);
      }
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_' || text[j] == '.')) {
        ++j;
      }
      t.kind = Token::Kind::kIdent;
      t.text = std::string(text.substr(i, j - i));
      i = j;
    } else {
      static constexpr std::string_view kTwo[] = {"<=", ">=", "==", "!="};
      static constexpr std::string_view kOne = "+-*/()&'<>=";
      t.kind = Token::Kind::kSymbol;
      bool matched = false;
      for (auto two : kTwo) {
        if (text.substr(i, 2) == two) {
          t.text = std::string(two);
          i += 2;
          matched = true;
          break;
        }
      }
      if (!matched) {
        if (kOne.find(c) == std::string_view::npos) {
          throw SyntaxError(std::string("unexpected character '") + c + "' at offset " +
                                std::to_string(t.offset),
                            t.offset);
        }
        t.text = std::string(1, c);
        ++i;
      }
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.offset = base_offset + text.size();
  out.push_back(end);
  return out;
}

}  // namespace detail

// ---- LinearExpression ----

double LinearExpression::coefficient(const std::string& name) const {
  auto it = coefficients.find(name);
  return it == coefficients.end() ? 0.0 : it->second;
}

bool LinearExpression::is_constant() const {
  for (const auto& [_, c] : coefficients) {
    if (c != 0.0) return false;
  }
  return true;
}

double LinearExpression::evaluate(const std::map<std::string, double>& env) const {
  double acc = constant;
  for (const auto& [name, c] : coefficients) {
    auto it = env.find(name);
    if (it == env.end()) throw Error("evaluate: no value for '" + name + "'");
    acc += c * it->second;
  }
  return acc;
}

LinearExpression& LinearExpression::operator+=(const LinearExpression& o) {
  for (const auto& [name, c] : o.coefficients) coefficients[name] += c;
  constant += o.constant;
  return *this;
}

LinearExpression& LinearExpression::operator-=(const LinearExpression& o) {
  for (const auto& [name, c] : o.coefficients) coefficients[name] -= c;
  constant -= o.constant;
  return *this;
}

LinearExpression LinearExpression::scaled(double s) const {
  LinearExpression r = *this;
  for (auto& [_, c] : r.coefficients) c *= s;
  r.constant *= s;
  return r;
}

std::string to_string(const LinearExpression& e) {
  std::string out;
  for (const auto& [name, c] : e.coefficients) {
    if (!out.empty()) out += " + ";
    out += detail::format_number(c) + "*" + name;
  }
  if (out.empty() || e.constant != 0.0) {
    if (!out.empty()) out += " + ";
    out += detail::format_number(e.constant);
  }
  return out;
}

// ---- Expr ----

Expr Expr::number(double v, std::size_t offset) {
  Expr e;
  e.op = Op::kNumber;
  e.value = v;
  e.offset = offset;
  return e;
}

Expr Expr::ident(std::string n, std::size_t offset) {
  Expr e;
  e.op = Op::kIdent;
  e.name = std::move(n);
  e.offset = offset;
  return e;
}

Expr Expr::unary(Op op, Expr a, std::size_t offset) {
  Expr e;
  e.op = op;
  e.args.push_back(std::move(a));
  e.offset = offset;
  return e;
}

Expr Expr::binary(Op op, Expr a, Expr b, std::size_t offset) {
  Expr e;
  e.op = op;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  e.offset = offset;
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.op != b.op) return false;
  switch (a.op) {
    case Expr::Op::kNumber:
      return a.value == b.value;
    case Expr::Op::kIdent:
      return a.name == b.name;
    default:
      return a.args == b.args;
  }
}

namespace {

using detail::Token;

class ExprParser {
 public:
  explicit ExprParser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Expr parse_all() {
    Expr e = parse_sum();
    if (peek().kind != Token::Kind::kEnd) fail("unexpected '" + describe(peek()) + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  static std::string describe(const Token& t) {
    if (t.kind == Token::Kind::kEnd) return "end of input";
    return t.text;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at offset " + std::to_string(peek().offset), peek().offset);
  }

  Expr parse_sum() {
    Expr lhs = parse_product();
    while (peek().is("+") || peek().is("-")) {
      const Token& op = next();
      Expr rhs = parse_product();
      lhs = Expr::binary(op.text == "+" ? Expr::Op::kAdd : Expr::Op::kSub, std::move(lhs),
                         std::move(rhs), op.offset);
    }
    return lhs;
  }

  Expr parse_product() {
    Expr lhs = parse_unary();
    while (peek().is("*") || peek().is("/")) {
      const Token& op = next();
      Expr rhs = parse_unary();
      lhs = Expr::binary(op.text == "*" ? Expr::Op::kMul : Expr::Op::kDiv, std::move(lhs),
                         std::move(rhs), op.offset);
    }
    return lhs;
  }

  Expr parse_unary() {
    if (peek().is("-")) {
      const std::size_t at = next().offset;
      return Expr::unary(Expr::Op::kNeg, parse_unary(), at);
    }
    if (peek().is("+")) {
      next();
      return parse_unary();
    }
    return parse_primary();
  }

  Expr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::kNumber:
        next();
        return Expr::number(t.number, t.offset);
      case Token::Kind::kIdent:
        next();
        return Expr::ident(t.text, t.offset);
      case Token::Kind::kSymbol:
        if (t.is("(")) {
          next();
          Expr inner = parse_sum();
          if (!peek().is(")")) fail("expected ')'");
          next();
          return inner;
        }
        fail("unexpected '" + t.text + "'");
      case Token::Kind::kEnd:
        fail("unexpected end of input");
    }
    fail("unexpected token");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.op) {
    case Expr::Op::kAdd:
    case Expr::Op::kSub:
      return 1;
    case Expr::Op::kMul:
    case Expr::Op::kDiv:
      return 2;
    case Expr::Op::kNeg:
      return 3;
    case Expr::Op::kNumber:
      return e.value < 0 || std::signbit(e.value) ? 3 : 4;
    case Expr::Op::kIdent:
      return 4;
  }
  return 4;
}

std::string wrap(const Expr& e, bool parens) {
  return parens ? "(" + to_string(e) + ")" : to_string(e);
}

}  // namespace

Expr parse_expr(std::string_view text, std::size_t base_offset) {
  ExprParser p(detail::tokenize(text, base_offset));
  return p.parse_all();
}

std::string to_string(const Expr& e) {
  switch (e.op) {
    case Expr::Op::kNumber:
      return detail::format_number(e.value);
    case Expr::Op::kIdent:
      return e.name;
    case Expr::Op::kNeg:
      return "-" + wrap(e.args[0], precedence(e.args[0]) < 3);
    default:
      break;
  }
  const char* sym = e.op == Expr::Op::kAdd   ? " + "
                    : e.op == Expr::Op::kSub ? " - "
                    : e.op == Expr::Op::kMul ? "*"
                                             : "/";
  const int p = precedence(e);
  return wrap(e.args[0], precedence(e.args[0]) < p) + sym +
         wrap(e.args[1], precedence(e.args[1]) <= p);
}

std::set<std::string> identifiers(const Expr& e) {
  std::set<std::string> out;
  std::function<void(const Expr&)> walk = [&](const Expr& n) {
    if (n.op == Expr::Op::kIdent) out.insert(n.name);
    for (const auto& a : n.args) walk(a);
  };
  walk(e);
  return out;
}

Expr substitute(const Expr& e, const std::function<Expr(const std::string&)>& replace) {
  if (e.op == Expr::Op::kIdent) {
    Expr r = replace(e.name);
    if (r.offset == 0) r.offset = e.offset;
    return r;
  }
  Expr copy = e;
  for (auto& a : copy.args) a = substitute(a, replace);
  return copy;
}

LinearExpression linearize(const Expr& e) {
  switch (e.op) {
    case Expr::Op::kNumber:
      return LinearExpression{{}, e.value};
    case Expr::Op::kIdent:
      return LinearExpression{{{e.name, 1.0}}, 0.0};
    case Expr::Op::kNeg:
      return linearize(e.args[0]).scaled(-1.0);
    case Expr::Op::kAdd: {
      LinearExpression l = linearize(e.args[0]);
      l += linearize(e.args[1]);
      return l;
    }
    case Expr::Op::kSub: {
      LinearExpression l = linearize(e.args[0]);
      l -= linearize(e.args[1]);
      return l;
    }
    case Expr::Op::kMul: {
      LinearExpression l = linearize(e.args[0]);
      LinearExpression r = linearize(e.args[1]);
      if (l.is_constant()) return r.scaled(l.constant);
      if (r.is_constant()) return l.scaled(r.constant);
      throw NonlinearTermError(
          "nonlinear term '" + to_string(e) + "' at offset " + std::to_string(e.offset), e.offset);
    }
    case Expr::Op::kDiv: {
      LinearExpression l = linearize(e.args[0]);
      LinearExpression r = linearize(e.args[1]);
      if (!r.is_constant()) {
        throw NonlinearTermError("division by non-constant '" + to_string(e.args[1]) +
                                     "' at offset " + std::to_string(e.offset),
                                 e.offset);
      }
      if (r.constant == 0.0) {
        throw NumericError("division by zero at offset " + std::to_string(e.offset));
      }
      return l.scaled(1.0 / r.constant);
    }
  }
  return {};
}

}  // namespace reachpipe
