// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#include "expr.hpp"

#include <cctype>

namespace dpr {

namespace {

struct Token {
  enum class Kind { number, ident, plus, minus, star, caret, lparen, rparen, end };
  Kind kind;
  std::string text;  // number (possibly "a/b") or identifier
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_.pos = pos_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::end;
      tok_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t begin = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      // A '/' directly followed by digits is part of a fraction literal.
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      tok_.kind = Token::Kind::number;
      tok_.text = text_.substr(begin, pos_ - begin);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t begin = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Kind::ident;
      tok_.text = text_.substr(begin, pos_ - begin);
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_.kind = Token::Kind::plus; return;
      case '-': tok_.kind = Token::Kind::minus; return;
      case '*': tok_.kind = Token::Kind::star; return;
      case '^': tok_.kind = Token::Kind::caret; return;
      case '(': tok_.kind = Token::Kind::lparen; return;
      case ')': tok_.kind = Token::Kind::rparen; return;
      default:
        fail(Errc::parse_error, "unexpected character '" + std::string(1, c) + "' at position " +
                                    std::to_string(tok_.pos));
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& text, const RingSpec& spec) : lex_(text), spec_(spec) {}

  Poly parse() {
    Poly p = expr();
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::end)
      fail(Errc::parse_error, "unexpected trailing input at position " + std::to_string(t.pos));
    return p;
  }

 private:
  Poly expr() {
    Poly acc = term();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Token::Kind::plus) {
        lex_.take();
        acc = acc + term();
      } else if (t.kind == Token::Kind::minus) {
        lex_.take();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (lex_.peek().kind == Token::Kind::star) {
      lex_.take();
      acc = mul(acc, factor());
    }
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (lex_.peek().kind == Token::Kind::caret) {
      Token caret = lex_.take();
      Token t = lex_.take();
      if (t.kind != Token::Kind::number || t.text.find('/') != std::string::npos)
        fail(Errc::parse_error,
             "exponent must be a natural number at position " + std::to_string(caret.pos));
      unsigned long e = 0;
      try {
        e = std::stoul(t.text);
      } catch (const std::exception&) {
        fail(Errc::parse_error, "exponent out of range at position " + std::to_string(t.pos));
      }
      Poly acc = Poly::constant(spec_, Scalar::one(spec_.field()));
      for (unsigned long k = 0; k < e; ++k) acc = mul(acc, b);
      return acc;
    }
    return b;
  }

  Poly base() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Kind::number: {
        Scalar c;
        try {
          c = Scalar::parse(t.text, spec_.field());
        } catch (const Error& e) {
          fail(e.code() == Errc::bad_literal ? Errc::parse_error : e.code(),
               std::string(e.what()) + " (position " + std::to_string(t.pos) + ")");
        }
        return Poly::constant(spec_, c);
      }
      case Token::Kind::ident: {
        int v = spec_.var_index(t.text);
        if (v < 0)
          fail(Errc::unknown_identifier,
               "unknown identifier '" + t.text + "' at position " + std::to_string(t.pos));
        return Poly::variable(spec_, v);
      }
      case Token::Kind::lparen: {
        Poly p = expr();
        Token close = lex_.take();
        if (close.kind != Token::Kind::rparen)
          fail(Errc::parse_error, "expected ')' at position " + std::to_string(close.pos));
        return p;
      }
      case Token::Kind::minus:
        return -base();
      default:
        fail(Errc::parse_error, "unexpected token at position " + std::to_string(t.pos));
    }
  }

  Lexer lex_;
  const RingSpec& spec_;
};

}  // namespace

Poly parse_expression(const std::string& text, const RingSpec& spec) {
  return Parser(text, spec).parse();
}

std::vector<Poly> parse_expression_list(const std::string& text, const RingSpec& spec) {
  std::vector<Poly> out;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t comma = text.find(',', begin);
    std::string item =
        comma == std::string::npos ? text.substr(begin) : text.substr(begin, comma - begin);
    std::size_t a = item.find_first_not_of(" \t");
    if (a == std::string::npos)
      fail(Errc::parse_error, "empty entry in expression list");
    out.push_back(parse_expression(item, spec));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return out;
}

RingSpec make_ring_spec(const Field& field, const std::vector<std::string>& names,
                        const std::map<std::pair<int, int>, std::string>& delta_exprs) {
  const int n = static_cast<int>(names.size());
  std::map<std::pair<int, int>, TermMap> entries;
  // Entry (i, j) lives in the subring on variables below i; build prefixes
  // incrementally so each row is parsed with the table rows below it in force.
  for (int i = 1; i < n; ++i) {
    std::map<std::pair<int, int>, TermMap> prefix_entries;
    for (const auto& [ij, tm] : entries)
      if (ij.first < i) prefix_entries.emplace(ij, tm);
    // The prefix monomials already have full width trimmed below.
    std::map<std::pair<int, int>, TermMap> trimmed;
    for (const auto& [ij, tm] : prefix_entries) {
      TermMap t;
      for (const auto& [m, c] : tm) {
        std::vector<std::uint32_t> exps(m.exps().begin(), m.exps().begin() + i);
        t.emplace(Monomial(std::move(exps)), c);
      }
      trimmed[ij] = std::move(t);
    }
    RingSpec prefix = RingSpec::create(field, {names.begin(), names.begin() + i}, trimmed);
    for (int j = 0; j < i; ++j) {
      auto it = delta_exprs.find({i, j});
      if (it == delta_exprs.end()) continue;
      Poly p = parse_expression(it->second, prefix);
      TermMap widened;
      for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> exps(m.exps());
        exps.resize(n, 0);
        widened.emplace(Monomial(std::move(exps)), c);
      }
      if (!widened.empty()) entries[{i, j}] = std::move(widened);
    }
  }
  for (const auto& [ij, e] : delta_exprs) {
    if (ij.first >= n || ij.second < 0 || ij.second >= ij.first)
      fail(Errc::bad_argument, "derivation table index (" + std::to_string(ij.first + 1) + "," +
                                   std::to_string(ij.second + 1) + ") out of range");
  }
  return RingSpec::create(field, names, entries);
}

}  // namespace dpr
