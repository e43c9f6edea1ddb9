// Copyright 2026 The folint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file formparse.hpp
 * @brief Text format for polynomials, planar 1-forms and rational functions.
 *
 * Grammar (whitespace ignored, explicit '*' required):
 *
 *     expr     := term (('+' | '-') term)*
 *     term     := unary ('*' unary)*
 *     unary    := ('+' | '-') unary | power
 *     power    := primary ('^' uint)?
 *     primary  := uint ('/' uint)? | variable | '(' expr ')'
 *
 *     form     := summand (('+' | '-') summand)*
 *     summand  := ('(' expr ')' | rational)? '*'? ('dx' | 'dy')
 *
 *     function := expr ('/' expr)?
 *     field    := expr ';' expr
 *
 * Printing is canonical: terms in lexicographic order, largest first, so
 * parse_poly(print_canonical(p)) == p.
 */

#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folint/bivariate_gcd.hpp"
#include "folint/multipoly.hpp"

namespace folint {

/// A dx + B dy with A, B in Q[x, y].
struct PlanarOneForm {
  QPoly A{planar_vars()};
  QPoly B{planar_vars()};
  friend bool operator==(const PlanarOneForm&, const PlanarOneForm&) = default;
};

/// Planar vector field a d/dx + b d/dy.
struct PlanarField {
  QPoly a{planar_vars()};
  QPoly b{planar_vars()};
};

/// f1 / f2.
struct RationalFunction {
  QPoly num{planar_vars()};
  QPoly den{planar_vars()};
};

namespace detail {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Semicolon, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, s.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ';': k = Tok::Semicolon; break;
      default:
        throw SyntaxError(start, {"number", "variable", "operator"}, std::string(1, ch));
    }
    out.push_back({k, std::string(1, ch), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, VarList vars) : toks_(lex(text)), vars_(std::move(vars)) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(i_ + ahead, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token take() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw SyntaxError(peek().pos, std::move(expected), peek().text);
  }
  void expect(Tok k, const char* what) {
    if (!at(k)) fail({what});
    take();
  }
  void expect_end() {
    if (!at(Tok::End)) fail({"end of input", "'+'", "'-'", "'*'"});
  }
  bool is_differential() const { return at(Tok::Ident) && (peek().text == "dx" || peek().text == "dy"); }

  QPoly expr() {
    QPoly acc = term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const bool minus = take().kind == Tok::Minus;
      if (minus)
        acc -= term();
      else
        acc += term();
    }
    return acc;
  }

  QPoly term() {
    QPoly acc = unary();
    while (at(Tok::Star) && !(peek(1).kind == Tok::Ident && (peek(1).text == "dx" || peek(1).text == "dy"))) {
      take();
      acc = acc * unary();
    }
    return acc;
  }

  QPoly unary() {
    if (at(Tok::Minus)) {
      take();
      return -unary();
    }
    if (at(Tok::Plus)) {
      take();
      return unary();
    }
    return power();
  }

  QPoly power() {
    QPoly base = primary();
    if (at(Tok::Caret)) {
      take();
      if (!at(Tok::Number)) fail({"nonnegative integer exponent"});
      const Token t = take();
      if (t.text.size() > 6) throw SyntaxError(t.pos, {"exponent below 1000000"}, t.text);
      base = base.pow(static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
  }

  Rational rational_literal() {
    const Token n = take();
    if (at(Tok::Slash) && peek(1).kind == Tok::Number) {
      take();
      const Token d = take();
      Integer den(d.text, 10);
      if (den == 0) throw SyntaxError(d.pos, {"nonzero denominator"}, d.text);
      return Rational(Integer(n.text, 10), den);
    }
    return Rational(Integer(n.text, 10));
  }

  QPoly primary() {
    if (at(Tok::Number)) return QPoly::constant(vars_, rational_literal());
    if (at(Tok::Ident)) {
      const Token t = take();
      if (std::find(vars_.begin(), vars_.end(), t.text) == vars_.end()) throw UnknownVariable(t.text, t.pos);
      return QPoly::variable(vars_, t.text);
    }
    if (at(Tok::LParen)) {
      take();
      QPoly e = expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    fail({"number", "variable", "'('", "'-'"});
  }

  PlanarOneForm form() {
    PlanarOneForm f;
    bool seen_dx = false, seen_dy = false, first = true;
    while (true) {
      bool minus = false;
      if (at(Tok::Plus) || at(Tok::Minus)) {
        minus = take().kind == Tok::Minus;
      } else if (!first) {
        break;
      }
      first = false;
      QPoly coef = QPoly::constant(vars_, Rational(1));
      if (at(Tok::LParen)) {
        take();
        coef = expr();
        expect(Tok::RParen, "')'");
      } else if (at(Tok::Number)) {
        coef = QPoly::constant(vars_, rational_literal());
      }
      if (at(Tok::Star)) take();
      if (!is_differential()) fail({"'dx'", "'dy'"});
      const Token d = take();
      if (minus) coef = -coef;
      bool& seen = d.text == "dx" ? seen_dx : seen_dy;
      if (seen) throw SyntaxError(d.pos, {"each differential at most once"}, d.text);
      seen = true;
      (d.text == "dx" ? f.A : f.B) += coef;
    }
    expect_end();
    return f;
  }

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;
  VarList vars_;
};

}  // namespace detail

/// Parses a polynomial over Q in the given variables (default x, y).
inline QPoly parse_poly(const std::string& text, const VarList& vars = planar_vars()) {
  detail::Parser p(text, vars);
  QPoly r = p.expr();
  p.expect_end();
  return r;
}

/// Throws CoprimalityViolation if A and B share a nonconstant factor.
inline void validate_coprime(const PlanarOneForm& w);

/// Parses "(A) dx + (B) dy". With validate, rejects the zero form and forms
/// whose coefficients share a nonconstant factor.
inline PlanarOneForm parse_one_form(const std::string& text, bool validate = true) {
  detail::Parser p(text, planar_vars());
  PlanarOneForm f = p.form();
  if (validate) validate_coprime(f);
  return f;
}

/// Parses "f1/f2" (or a bare polynomial, f2 = 1).
inline RationalFunction parse_rational_function(const std::string& text) {
  detail::Parser p(text, planar_vars());
  RationalFunction f;
  f.num = p.expr();
  f.den = QPoly::constant(planar_vars(), Rational(1));
  if (p.at(detail::Tok::Slash)) {
    p.take();
    f.den = p.expr();
  }
  p.expect_end();
  if (f.den.is_zero()) throw DivisionByZero();
  return f;
}

/// Parses "a;b" as the vector field a d/dx + b d/dy.
inline PlanarField parse_field(const std::string& text) {
  detail::Parser p(text, planar_vars());
  PlanarField f;
  f.a = p.expr();
  p.expect(detail::Tok::Semicolon, "';'");
  f.b = p.expr();
  p.expect_end();
  return f;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

template <ExactField K>
std::string print_canonical(const MultiPoly<K>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.vars()[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef = to_text(c);
    bool negative = false;
    if (!coef.empty() && coef[0] == '-' && coef.find_first_of("+-", 1) == std::string::npos) {
      negative = true;
      coef = coef.substr(1);
    }
    if (coef.find_first_of("+- ") != std::string::npos) coef = "(" + coef + ")";
    std::string term;
    if (mono.empty())
      term = coef;
    else if (coef == "1")
      term = mono;
    else
      term = coef + "*" + mono;
    if (first)
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

inline std::string print_canonical(const PlanarOneForm& w) {
  return "(" + print_canonical(w.A) + ") dx + (" + print_canonical(w.B) + ") dy";
}

inline void validate_coprime(const PlanarOneForm& w) {
  if (w.A.is_zero() && w.B.is_zero()) throw DegenerateField("the zero 1-form defines no foliation");
  QPoly g = bivariate_gcd(w.A, w.B);
  if (!g.is_constant()) throw CoprimalityViolation(print_canonical(g));
}

/// Divides both coefficients by their gcd; returns the removed factor.
inline QPoly strip_common_factor(PlanarOneForm& w) {
  QPoly g = bivariate_gcd(w.A, w.B);
  if (g.is_constant()) return QPoly::constant(planar_vars(), Rational(1));
  w.A = *mp_exact_divide(w.A, g);
  w.B = *mp_exact_divide(w.B, g);
  return g;
}

}  // namespace folint
