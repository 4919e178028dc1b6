// Copyright 2026 The qeq developers
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

#include "qeq/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

namespace qeq::qasm {

namespace {

struct Token {
  enum class Type { ident, number, string, symbol, eof };
  Type type = Type::eof;
  std::string text;
  double value = 0.0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(ParseError::Kind kind, const std::string& msg) const {
    throw ParseError(kind, tok_.line, tok_.col, msg);
  }

 private:
  void advance() {
    skip_space();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.type = Token::Type::eof;
      tok_.text.clear();
      return;
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        bump();
      }
      tok_.type = Token::Type::ident;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        bump();
      }
      if (pos_ < src_.size() && src_[pos_] == '.') {
        bump();
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          bump();
        }
      }
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        std::size_t mark = pos_;
        bump();
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
          bump();
        }
        if (pos_ < src_.size() &&
            std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          while (pos_ < src_.size() &&
                 std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            bump();
          }
        } else {
          pos_ = mark;  // bare 'e' belongs to the next token
        }
      }
      tok_.type = Token::Type::number;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      tok_.value = std::strtod(tok_.text.c_str(), nullptr);
      return;
    }
    if (c == '"') {
      bump();
      std::size_t start = pos_;
      while (pos_ < src_.size() && src_[pos_] != '"') bump();
      if (pos_ >= src_.size()) {
        throw ParseError(ParseError::Kind::syntax, tok_.line, tok_.col,
                         "unterminated string literal");
      }
      tok_.type = Token::Type::string;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      bump();  // closing quote
      return;
    }
    tok_.type = Token::Type::symbol;
    tok_.text = std::string(1, c);
    bump();
    if (tok_.text == "-" && pos_ < src_.size() && src_[pos_] == '>') {
      tok_.text = "->";
      bump();
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

struct GateSpec {
  std::optional<GateKind> kind;  // empty for ccx (decomposed)
  int n_args;
  bool parametric;
};

const std::map<std::string, GateSpec, std::less<>>& gate_table() {
  static const std::map<std::string, GateSpec, std::less<>> table = {
      {"h", {GateKind::H, 1, false}},     {"s", {GateKind::S, 1, false}},
      {"sdg", {GateKind::Sdg, 1, false}}, {"t", {GateKind::T, 1, false}},
      {"tdg", {GateKind::Tdg, 1, false}}, {"x", {GateKind::X, 1, false}},
      {"y", {GateKind::Y, 1, false}},     {"z", {GateKind::Z, 1, false}},
      {"sx", {GateKind::SX, 1, false}},   {"sxdg", {GateKind::SXdg, 1, false}},
      {"rz", {GateKind::Rz, 1, true}},    {"rx", {GateKind::Rx, 1, true}},
      {"ry", {GateKind::Ry, 1, true}},    {"u1", {GateKind::U1, 1, true}},
      {"cx", {GateKind::CX, 2, false}},   {"cz", {GateKind::CZ, 2, false}},
      {"swap", {GateKind::SWAP, 2, false}},
      {"ccx", {std::nullopt, 3, false}},
  };
  return table;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Circuit run() {
    parse_header();
    while (lex_.peek().type != Token::Type::eof) {
      parse_statement();
    }
    circuit_.n_qubits = total_qubits_;
    return std::move(circuit_);
  }

 private:
  void parse_header() {
    const Token kw = lex_.next();
    if (kw.type != Token::Type::ident || kw.text != "OPENQASM") {
      throw ParseError(ParseError::Kind::syntax, kw.line, kw.col,
                       "expected OPENQASM header");
    }
    const Token ver = lex_.next();
    if (ver.type != Token::Type::number || ver.text != "2.0") {
      throw ParseError(ParseError::Kind::unsupported, ver.line, ver.col,
                       "only OPENQASM 2.0 is supported");
    }
    expect_symbol(";");
  }

  void parse_statement() {
    const Token t = lex_.peek();
    if (t.type != Token::Type::ident) {
      lex_.fail(ParseError::Kind::syntax, "expected a statement");
    }
    if (t.text == "include") {
      parse_include();
    } else if (t.text == "qreg") {
      parse_qreg();
    } else if (t.text == "creg") {
      parse_creg();
    } else if (t.text == "barrier") {
      parse_barrier();
    } else if (t.text == "measure") {
      throw ParseError(ParseError::Kind::unsupported, t.line, t.col,
                       "measure statements are not supported; equivalence is "
                       "defined on the pure unitary");
    } else if (t.text == "reset") {
      throw ParseError(ParseError::Kind::unsupported, t.line, t.col,
                       "reset statements are not supported");
    } else if (t.text == "gate") {
      throw ParseError(ParseError::Kind::unsupported, t.line, t.col,
                       "user gate definitions are not supported");
    } else if (t.text == "opaque") {
      throw ParseError(ParseError::Kind::unsupported, t.line, t.col,
                       "opaque declarations are not supported");
    } else if (t.text == "if") {
      throw ParseError(ParseError::Kind::unsupported, t.line, t.col,
                       "classically controlled statements are not supported");
    } else {
      parse_gate();
    }
  }

  void parse_include() {
    lex_.next();
    const Token file = lex_.next();
    if (file.type != Token::Type::string) {
      throw ParseError(ParseError::Kind::syntax, file.line, file.col,
                       "expected a file name after include");
    }
    if (file.text != "qelib1.inc") {
      throw ParseError(ParseError::Kind::unsupported, file.line, file.col,
                       "only include \"qelib1.inc\" is supported");
    }
    expect_symbol(";");
  }

  void parse_qreg() {
    lex_.next();
    const Token name = expect_ident("register name");
    expect_symbol("[");
    const Token size = lex_.next();
    if (size.type != Token::Type::number ||
        size.value != std::floor(size.value) || size.value < 1) {
      throw ParseError(ParseError::Kind::syntax, size.line, size.col,
                       "register size must be a positive integer");
    }
    expect_symbol("]");
    expect_symbol(";");
    if (qregs_.contains(name.text)) {
      throw ParseError(ParseError::Kind::syntax, name.line, name.col,
                       "register '" + name.text + "' redeclared");
    }
    const auto n = static_cast<std::uint32_t>(size.value);
    qregs_.emplace(name.text, Reg{total_qubits_, n});
    total_qubits_ += n;
  }

  void parse_creg() {
    lex_.next();
    expect_ident("register name");
    expect_symbol("[");
    lex_.next();
    expect_symbol("]");
    expect_symbol(";");
    // declarations are accepted and ignored; any use is rejected elsewhere
  }

  void parse_barrier() {
    lex_.next();
    while (lex_.peek().type != Token::Type::eof &&
           !(lex_.peek().type == Token::Type::symbol &&
             lex_.peek().text == ";")) {
      lex_.next();
    }
    expect_symbol(";");
  }

  void parse_gate() {
    const Token name = lex_.next();
    const auto& table = gate_table();
    const auto it = table.find(name.text);
    if (it == table.end()) {
      throw ParseError(ParseError::Kind::unsupported, name.line, name.col,
                       "unknown gate '" + name.text + "'");
    }
    const GateSpec& spec = it->second;

    double angle = 0.0;
    if (lex_.peek().type == Token::Type::symbol && lex_.peek().text == "(") {
      if (!spec.parametric) {
        throw ParseError(ParseError::Kind::syntax, name.line, name.col,
                         "gate '" + name.text + "' takes no parameter");
      }
      lex_.next();
      angle = parse_expr();
      expect_symbol(")");
      if (!std::isfinite(angle)) {
        throw ParseError(ParseError::Kind::syntax, name.line, name.col,
                         "angle expression is not finite");
      }
    } else if (spec.parametric) {
      throw ParseError(ParseError::Kind::syntax, name.line, name.col,
                       "gate '" + name.text + "' requires a parameter");
    }

    std::vector<std::uint32_t> args;
    args.push_back(parse_qubit_arg());
    while (lex_.peek().type == Token::Type::symbol &&
           lex_.peek().text == ",") {
      lex_.next();
      args.push_back(parse_qubit_arg());
    }
    expect_symbol(";");

    if (static_cast<int>(args.size()) != spec.n_args) {
      throw ParseError(ParseError::Kind::syntax, name.line, name.col,
                       "gate '" + name.text + "' expects " +
                           std::to_string(spec.n_args) + " qubit argument(s)");
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      for (std::size_t j = i + 1; j < args.size(); ++j) {
        if (args[i] == args[j]) {
          throw ParseError(ParseError::Kind::index, name.line, name.col,
                           "duplicate qubit operand");
        }
      }
    }

    if (!spec.kind.has_value()) {
      emit_ccx(args[0], args[1], args[2]);
      return;
    }
    const GateKind k = *spec.kind;
    if (is_two_qubit(k)) {
      circuit_.push(Gate(k, args[0], args[1]));
    } else if (is_parametric(k)) {
      circuit_.push(Gate(k, args[0], angle));
    } else {
      circuit_.push(Gate(k, args[0]));
    }
  }

  // fixed Clifford+T template for the Toffoli gate
  void emit_ccx(std::uint32_t c1, std::uint32_t c2, std::uint32_t t) {
    using K = GateKind;
    circuit_.push(Gate(K::H, t));
    circuit_.push(Gate(K::CX, c2, t));
    circuit_.push(Gate(K::Tdg, t));
    circuit_.push(Gate(K::CX, c1, t));
    circuit_.push(Gate(K::T, t));
    circuit_.push(Gate(K::CX, c2, t));
    circuit_.push(Gate(K::Tdg, t));
    circuit_.push(Gate(K::CX, c1, t));
    circuit_.push(Gate(K::T, c2));
    circuit_.push(Gate(K::T, t));
    circuit_.push(Gate(K::H, t));
    circuit_.push(Gate(K::CX, c1, c2));
    circuit_.push(Gate(K::T, c1));
    circuit_.push(Gate(K::Tdg, c2));
    circuit_.push(Gate(K::CX, c1, c2));
  }

  std::uint32_t parse_qubit_arg() {
    const Token name = expect_ident("qubit reference");
    const auto it = qregs_.find(name.text);
    if (it == qregs_.end()) {
      throw ParseError(ParseError::Kind::index, name.line, name.col,
                       "unknown register '" + name.text + "'");
    }
    if (!(lex_.peek().type == Token::Type::symbol &&
          lex_.peek().text == "[")) {
      throw ParseError(ParseError::Kind::syntax, name.line, name.col,
                       "whole-register operands are not supported; index the "
                       "register explicitly");
    }
    lex_.next();
    const Token ix = lex_.next();
    if (ix.type != Token::Type::number ||
        ix.value != std::floor(ix.value) || ix.value < 0) {
      throw ParseError(ParseError::Kind::syntax, ix.line, ix.col,
                       "qubit index must be a non-negative integer");
    }
    expect_symbol("]");
    const auto index = static_cast<std::uint32_t>(ix.value);
    if (index >= it->second.size) {
      throw ParseError(ParseError::Kind::index, ix.line, ix.col,
                       "qubit index " + std::to_string(index) +
                           " out of range for register '" + name.text + "[" +
                           std::to_string(it->second.size) + "]'");
    }
    return it->second.offset + index;
  }

  // angle grammar: literals, pi, + - * /, unary minus, parentheses;
  // constant-folded to one real at parse time
  double parse_expr() {
    double v = parse_term();
    while (lex_.peek().type == Token::Type::symbol &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      const std::string op = lex_.next().text;
      const double rhs = parse_term();
      v = op == "+" ? v + rhs : v - rhs;
    }
    return v;
  }

  double parse_term() {
    double v = parse_factor();
    while (lex_.peek().type == Token::Type::symbol &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      const std::string op = lex_.next().text;
      const double rhs = parse_factor();
      v = op == "*" ? v * rhs : v / rhs;
    }
    return v;
  }

  double parse_factor() {
    const Token t = lex_.next();
    if (t.type == Token::Type::symbol && t.text == "-") {
      return -parse_factor();
    }
    if (t.type == Token::Type::symbol && t.text == "(") {
      const double v = parse_expr();
      expect_symbol(")");
      return v;
    }
    if (t.type == Token::Type::number) return t.value;
    if (t.type == Token::Type::ident && t.text == "pi") {
      return std::numbers::pi;
    }
    throw ParseError(ParseError::Kind::syntax, t.line, t.col,
                     "expected an angle expression");
  }

  Token expect_ident(const char* what) {
    const Token t = lex_.next();
    if (t.type != Token::Type::ident) {
      throw ParseError(ParseError::Kind::syntax, t.line, t.col,
                       std::string("expected ") + what);
    }
    return t;
  }

  void expect_symbol(const std::string& s) {
    const Token t = lex_.next();
    if (t.type != Token::Type::symbol || t.text != s) {
      throw ParseError(ParseError::Kind::syntax, t.line, t.col,
                       "expected '" + s + "'");
    }
  }

  struct Reg {
    std::uint32_t offset;
    std::uint32_t size;
  };

  Lexer lex_;
  std::map<std::string, Reg, std::less<>> qregs_;
  std::uint32_t total_qubits_ = 0;
  Circuit circuit_;
};

}  // namespace

Circuit parse(std::string_view text) {
  Parser p(text);
  Circuit c = p.run();
  validate(c);
  return c;
}

std::string emit(const Circuit& c) {
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  if (c.n_qubits > 0) {
    out += "qreg q[" + std::to_string(c.n_qubits) + "];\n";
  }
  char buf[64];
  for (const Gate& g : c.gates) {
    out += gate_name(g.kind);
    if (is_parametric(g.kind)) {
      std::snprintf(buf, sizeof(buf), "(%.17g)", g.angle);
      out += buf;
    }
    out += " q[" + std::to_string(g.qubits[0]) + "]";
    if (g.arity() == 2) {
      out += ",q[" + std::to_string(g.qubits[1]) + "]";
    }
    out += ";\n";
  }
  return out;
}

}  // namespace qeq::qasm
