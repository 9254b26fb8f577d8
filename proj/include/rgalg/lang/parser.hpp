#pragma once

#include <cctype>
#include <cstring>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rgalg/config.hpp"
#include "rgalg/lang/expr.hpp"

namespace rgalg::lang {

struct ParseError : Error {
  ParseError(std::size_t pos, std::vector<std::string> expected, const std::string& found)
      : Error(make_message(pos, expected, found)), offset(pos), expected(std::move(expected)) {}

  std::size_t offset;
  std::vector<std::string> expected;

 private:
  static std::string make_message(std::size_t pos, const std::vector<std::string>& exp, const std::string& found) {
    std::string m = "parse error at offset " + std::to_string(pos) + ": expected ";
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (i) m += i + 1 == exp.size() ? " or " : ", ";
      m += exp[i];
    }
    return m + ", found " + found;
  }
};

namespace detail {

enum class Tok { Ident, Number, Hole, LParen, RParen, LBrace, RBrace, Comma, Sym, End };

struct Token {
  Tok kind;
  std::string text;  // canonical spelling for Sym
  std::size_t pos;
};

inline std::vector<Token> lex(std::string_view s) {
  // Unicode spellings and their ASCII canonical forms.
  static const std::pair<const char*, const char*> aliases[] = {
      {"⊓", "|-|"}, {"⊔", "|+|"}, {"∥", "||"}, {"⋓", "&&"},
      {"∩", "&"},   {"∪", "+"},   {"¬", "~"},
  };
  static const char* symbols[] = {"|-|", "|+|", "^*!", "^o!", "||", "&&", "//", "^*", "^o", ";", "+", "&", "~"};
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    if (std::isalpha(c) || (c == '_' && i + 1 < s.size() && std::isalnum(static_cast<unsigned char>(s[i + 1])))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j - i > 6) throw ParseError(i, {"a state index"}, "'" + std::string(s.substr(i, j - i)) + "'");
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    switch (c) {
      case '_': out.push_back({Tok::Hole, "_", i++}); continue;
      case '(': out.push_back({Tok::LParen, "(", i++}); continue;
      case ')': out.push_back({Tok::RParen, ")", i++}); continue;
      case '{': out.push_back({Tok::LBrace, "{", i++}); continue;
      case '}': out.push_back({Tok::RBrace, "}", i++}); continue;
      case ',': out.push_back({Tok::Comma, ",", i++}); continue;
      default: break;
    }
    bool matched = false;
    for (auto [u, a] : aliases) {
      std::size_t n = std::strlen(u);
      if (s.substr(i, n) == u) {
        out.push_back({Tok::Sym, a, i});
        i += n;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    for (const char* sym : symbols) {
      std::size_t n = std::strlen(sym);
      if (s.substr(i, n) == sym) {
        out.push_back({Tok::Sym, sym, i});
        i += n;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    throw ParseError(i, {"a token"}, "'" + std::string(1, s[i]) + "'");
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Expr parse_all() {
    Expr e = binary(1);
    if (peek().kind != Tok::End) fail(binary_expectations(1));
    return e;
  }

  SetExpr parse_set_all(Sort sort) {
    SetExpr s = set_union(sort);
    if (peek().kind != Tok::End) fail({"'+'", "'&'", "end of input"});
    return s;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  const Token& next() { return toks_[k_++]; }
  bool sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.pos, std::move(expected), found);
  }

  static const std::vector<std::pair<const char*, Op>>& level_ops(int level) {
    static const std::vector<std::pair<const char*, Op>> ops[] = {
        {},
        {{"|-|", Op::Nondet}, {"|+|", Op::Sup}},
        {{"||", Op::Par}},
        {{"&&", Op::Conj}},
        {{"//", Op::Quot}},
        {{";", Op::Seq}},
    };
    return ops[level];
  }

  static std::vector<std::string> binary_expectations(int from) {
    std::vector<std::string> exp{"'^*'", "'^o'", "'^*!'", "'^o!'"};
    for (int l = 5; l >= from; --l) {
      for (auto& [s, o] : level_ops(l)) exp.push_back(std::string("'") + s + "'");
    }
    exp.push_back("end of input");
    return exp;
  }

  Expr binary(int level) {
    if (level > 5) return postfix();
    Expr lhs = binary(level + 1);
    for (;;) {
      bool hit = false;
      for (auto& [s, o] : level_ops(level)) {
        if (sym(s)) {
          next();
          lhs = Expr::binary(o, std::move(lhs), binary(level + 1));
          hit = true;
          break;
        }
      }
      if (!hit) return lhs;
    }
  }

  Expr postfix() {
    Expr e = atom();
    for (;;) {
      if (sym("^*")) e = Expr::postfix(Op::Star, std::move(e));
      else if (sym("^o")) e = Expr::postfix(Op::Omega, std::move(e));
      else if (sym("^*!")) e = Expr::postfix(Op::StarSkip, std::move(e));
      else if (sym("^o!")) e = Expr::postfix(Op::OmegaSkip, std::move(e));
      else return e;
      next();
    }
  }

  static std::vector<std::string> atom_expectations() {
    return {"'('", "a constant", "a constructor", "a metavariable", "'_'"};
  }

  Expr atom() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Expr e = binary(1);
      if (peek().kind != Tok::RParen) {
        auto exp = binary_expectations(1);
        exp.back() = "')'";
        fail(exp);
      }
      next();
      return e;
    }
    if (t.kind == Tok::Hole) {
      next();
      return Expr::hole();
    }
    if (t.kind != Tok::Ident) fail(atom_expectations());
    for (const auto& kw : kConstants) {
      if (t.text == kw.text) {
        next();
        return Expr::leaf(kw.op);
      }
    }
    for (const auto& kw : kConstructors) {
      if (t.text == kw.text) {
        next();
        if (peek().kind != Tok::LParen) fail({"'('"});
        next();
        SetExpr a = set_union(arg_sort(kw.op));
        if (peek().kind != Tok::RParen) fail({"'+'", "'&'", "')'"});
        next();
        return Expr::call(kw.op, std::move(a));
      }
    }
    if (is_reserved(t.text)) fail(atom_expectations());
    next();
    return Expr::var(t.text);
  }

  SetExpr set_union(Sort s) {
    SetExpr lhs = set_inter(s);
    while (sym("+")) {
      next();
      lhs = SetExpr::binary(SetExpr::Kind::Union, std::move(lhs), set_inter(s));
    }
    return lhs;
  }

  SetExpr set_inter(Sort s) {
    SetExpr lhs = set_unary(s);
    while (sym("&")) {
      next();
      lhs = SetExpr::binary(SetExpr::Kind::Inter, std::move(lhs), set_unary(s));
    }
    return lhs;
  }

  std::vector<std::string> set_expectations(Sort s) const {
    if (s == Sort::Relation) return {"'{'", "'id'", "'univ'", "'none'", "'~'", "'('", "a metavariable"};
    return {"'{'", "'all'", "'none'", "'~'", "'('", "a metavariable"};
  }

  SetExpr set_unary(Sort s) {
    if (sym("~")) {
      next();
      return SetExpr::compl_of(set_unary(s));
    }
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      SetExpr e = set_union(s);
      if (peek().kind != Tok::RParen) fail({"'+'", "'&'", "')'"});
      next();
      return e;
    }
    if (t.kind == Tok::LBrace) {
      next();
      return s == Sort::Relation ? rel_literal() : pred_literal();
    }
    if (t.kind == Tok::Ident) {
      using K = SetExpr::Kind;
      if (t.text == "none") return next(), SetExpr::leaf(K::None);
      if (s == Sort::Relation && t.text == "id") return next(), SetExpr::leaf(K::Id);
      if (s == Sort::Relation && t.text == "univ") return next(), SetExpr::leaf(K::Univ);
      if (s == Sort::Predicate && t.text == "all") return next(), SetExpr::leaf(K::All);
      if (!is_reserved(t.text)) {
        std::string n = t.text;
        next();
        return SetExpr::var(std::move(n));
      }
    }
    fail(set_expectations(s));
  }

  int number() {
    if (peek().kind != Tok::Number) fail({"a state index"});
    return std::stoi(next().text);
  }

  SetExpr rel_literal() {
    SetExpr s = SetExpr::leaf(SetExpr::Kind::Lit);
    if (peek().kind == Tok::RBrace) return next(), s;
    for (;;) {
      if (peek().kind != Tok::LParen) fail({"'('"});
      next();
      int a = number();
      if (peek().kind != Tok::Comma) fail({"','"});
      next();
      int b = number();
      if (peek().kind != Tok::RParen) fail({"')'"});
      next();
      s.pairs.emplace_back(a, b);
      if (peek().kind == Tok::Comma) {
        next();
        continue;
      }
      if (peek().kind == Tok::RBrace) return next(), s;
      fail({"','", "'}'"});
    }
  }

  SetExpr pred_literal() {
    SetExpr s = SetExpr::leaf(SetExpr::Kind::Lit);
    if (peek().kind == Tok::RBrace) return next(), s;
    for (;;) {
      s.members.push_back(number());
      if (peek().kind == Tok::Comma) {
        next();
        continue;
      }
      if (peek().kind == Tok::RBrace) return next(), s;
      fail({"','", "'}'"});
    }
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

}  // namespace detail

/// Parses a command expression. Throws ParseError.
inline Expr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

/// Parses a relation or predicate expression of the given sort.
inline SetExpr parse_set(std::string_view text, Sort sort) { return detail::Parser(text).parse_set_all(sort); }

}  // namespace rgalg::lang
