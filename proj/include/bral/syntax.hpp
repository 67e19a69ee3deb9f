// syntax.hpp
// Copyright (c) 2026, the bral authors
// Licensed under the Apache License Version 2.0.
//
// Concrete syntax. Application is left associative and binds tightest,
// `\x y. t` (or the UTF-8 lambda) abstracts, lowercase identifiers are
// variables and S K I B C S' B' C' B* are combinator constants. CL terms use
// the same grammar minus abstraction. Printers emit minimal parentheses and
// round-trip through the parsers.

#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bral/term.hpp"

namespace bral {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column, std::vector<std::string> expected = {})
      : std::runtime_error(message + " at " + std::to_string(line) + ":" + std::to_string(column)),
        message_(std::move(message)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::string message_;
  int line_, column_;
  std::vector<std::string> expected_;
};

namespace detail {

struct Token {
  enum class Kind : std::uint8_t { Lambda, Dot, LParen, RParen, Ident, Comb, End };
  Kind kind;
  std::string text;
  Comb comb = Comb::S;
  int line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token tok;
    tok.line = line_;
    tok.column = col_;
    if (pos_ >= src_.size()) {
      tok.kind = Token::Kind::End;
      return tok;
    }
    char c = src_[pos_];
    if (c == '\\') {
      advance();
      tok.kind = Token::Kind::Lambda;
      return tok;
    }
    // UTF-8 lambda, accepted as a synonym for backslash.
    if (static_cast<unsigned char>(c) == 0xCE && pos_ + 1 < src_.size() &&
        static_cast<unsigned char>(src_[pos_ + 1]) == 0xBB) {
      advance();
      advance();
      tok.kind = Token::Kind::Lambda;
      return tok;
    }
    if (c == '.') {
      advance();
      tok.kind = Token::Kind::Dot;
      return tok;
    }
    if (c == '(') {
      advance();
      tok.kind = Token::Kind::LParen;
      return tok;
    }
    if (c == ')') {
      advance();
      tok.kind = Token::Kind::RParen;
      return tok;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        word.push_back(src_[pos_]);
        advance();
      }
      if (std::islower(static_cast<unsigned char>(word[0]))) {
        tok.kind = Token::Kind::Ident;
        tok.text = std::move(word);
        return tok;
      }
      // Uppercase: must be a combinator name, optionally primed or starred.
      if (pos_ < src_.size() && (src_[pos_] == '\'' || src_[pos_] == '*')) {
        word.push_back(src_[pos_]);
        advance();
      }
      if (auto comb = comb_from_name(word)) {
        tok.kind = Token::Kind::Comb;
        tok.text = std::move(word);
        tok.comb = *comb;
        return tok;
      }
      throw ParseError("unknown combinator '" + word + "'", tok.line, tok.column,
                       {"S", "K", "I", "B", "C", "S'", "B'", "C'", "B*"});
    }
    throw ParseError(std::string("unexpected character '") + c + "'", tok.line, tok.column);
  }

 private:
  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else {
        break;
      }
    }
  }
  void advance() {
    ++pos_;
    ++col_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view src, bool allow_abs) : lexer_(src), allow_abs_(allow_abs) {
    bump();
  }

  Term parse_term() {
    Term t = term();
    expect_end();
    return t;
  }

 private:
  Term term() {
    if (tok_.kind == Token::Kind::Lambda) {
      if (!allow_abs_) throw err("lambda abstraction not allowed in CL terms", {});
      bump();
      std::vector<std::string> binders;
      while (tok_.kind == Token::Kind::Ident) {
        binders.push_back(tok_.text);
        bump();
      }
      if (binders.empty()) throw err("expected binder", {"variable"});
      if (tok_.kind != Token::Kind::Dot) throw err("expected '.'", {"."});
      bump();
      Term body = term();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        body = Term::abs(*it, std::move(body));
      return body;
    }
    return application();
  }

  Term application() {
    Term t = atom();
    while (starts_atom()) t = Term::app(std::move(t), atom());
    return t;
  }

  bool starts_atom() const {
    return tok_.kind == Token::Kind::Ident || tok_.kind == Token::Kind::Comb ||
           tok_.kind == Token::Kind::LParen;
  }

  Term atom() {
    switch (tok_.kind) {
      case Token::Kind::Ident: {
        Term t = Term::var(tok_.text);
        bump();
        return t;
      }
      case Token::Kind::Comb: {
        Term t = Term::prim(tok_.comb);
        bump();
        return t;
      }
      case Token::Kind::LParen: {
        bump();
        Term t = term();
        if (tok_.kind != Token::Kind::RParen) throw err("expected ')'", {")"});
        bump();
        return t;
      }
      default:
        throw err("expected term", {"variable", "combinator", "("});
    }
  }

  void expect_end() {
    if (tok_.kind != Token::Kind::End) throw err("trailing input", {"end of input"});
  }

  ParseError err(const std::string& msg, std::vector<std::string> expected) const {
    return ParseError(msg, tok_.line, tok_.column, std::move(expected));
  }

  void bump() { tok_ = lexer_.next(); }

  Lexer lexer_;
  Token tok_;
  bool allow_abs_;
};

inline ClTerm to_cl_unchecked(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return ClTerm::var(t.name());
    case Term::Kind::Prim: return ClTerm::prim(t.comb());
    case Term::Kind::App: return ClTerm::app(to_cl_unchecked(t.fun()), to_cl_unchecked(t.arg()));
    case Term::Kind::Abs: throw std::logic_error("abstraction in CL term");
  }
  throw std::logic_error("bad term");
}

}  // namespace detail

inline Term parse_lambda(std::string_view src) {
  return detail::Parser(src, /*allow_abs=*/true).parse_term();
}

inline ClTerm parse_cl(std::string_view src) {
  return detail::to_cl_unchecked(detail::Parser(src, /*allow_abs=*/false).parse_term());
}

namespace detail {

enum class PrintPos : std::uint8_t { Top, Fun, Arg };

inline void print_lambda_rec(const Term& t, PrintPos pos, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out += t.name();
      return;
    case Term::Kind::Prim:
      out += comb_name(t.comb());
      return;
    case Term::Kind::App: {
      bool paren = pos == PrintPos::Arg;
      if (paren) out += '(';
      print_lambda_rec(t.fun(), PrintPos::Fun, out);
      out += ' ';
      print_lambda_rec(t.arg(), PrintPos::Arg, out);
      if (paren) out += ')';
      return;
    }
    case Term::Kind::Abs: {
      bool paren = pos != PrintPos::Top;
      if (paren) out += '(';
      out += '\\';
      Term cur = t;
      for (;;) {
        out += cur.binder();
        cur = cur.body();
        if (!cur.is_abs()) break;
        out += ' ';
      }
      out += ". ";
      print_lambda_rec(cur, PrintPos::Top, out);
      if (paren) out += ')';
      return;
    }
  }
}

inline void print_cl_rec(const ClTerm& t, PrintPos pos, std::string& out) {
  switch (t.kind()) {
    case ClTerm::Kind::Var:
      out += t.name();
      return;
    case ClTerm::Kind::Prim:
      out += comb_name(t.comb());
      return;
    case ClTerm::Kind::App: {
      bool paren = pos == PrintPos::Arg;
      if (paren) out += '(';
      print_cl_rec(t.fun(), PrintPos::Fun, out);
      out += ' ';
      print_cl_rec(t.arg(), PrintPos::Arg, out);
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace detail

inline std::string print_lambda(const Term& t) {
  std::string out;
  detail::print_lambda_rec(t, detail::PrintPos::Top, out);
  return out;
}

inline std::string print_cl(const ClTerm& t) {
  std::string out;
  detail::print_cl_rec(t, detail::PrintPos::Top, out);
  return out;
}

}  // namespace bral
