#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rgalg::lang {

enum class Sort { Relation, Predicate };

/// Relation or predicate expression appearing as a constructor argument.
struct SetExpr {
  enum class Kind { Lit, Id, Univ, None, All, Var, Union, Inter, Compl };
  Kind kind = Kind::None;
  std::vector<std::pair<int, int>> pairs;  // Lit, relation sort
  std::vector<int> members;                // Lit, predicate sort
  std::string name;                        // Var
  std::vector<SetExpr> kids;               // Union, Inter: 2; Compl: 1

  friend bool operator==(const SetExpr&, const SetExpr&) = default;

  static SetExpr var(std::string n) {
    SetExpr s;
    s.kind = Kind::Var;
    s.name = std::move(n);
    return s;
  }
  static SetExpr leaf(Kind k) {
    SetExpr s;
    s.kind = k;
    return s;
  }
  static SetExpr binary(Kind k, SetExpr a, SetExpr b) {
    SetExpr s;
    s.kind = k;
    s.kids = {std::move(a), std::move(b)};
    return s;
  }
  static SetExpr compl_of(SetExpr a) {
    SetExpr s;
    s.kind = Kind::Compl;
    s.kids = {std::move(a)};
    return s;
  }
};

enum class Op {
  Bot, Top, Nil, Skip, Chaos, Term,
  PStep, EStep, EStepAbort, Guard, Pre, Atomic, EnvC, Spec, FinG, InfG,
  Nondet, Sup, Par, Conj, Quot, Seq,
  Star, Omega, StarSkip, OmegaSkip,
  MetaVar, Hole
};

struct Expr {
  Op op = Op::Top;
  std::vector<Expr> kids;
  std::string name;            // MetaVar
  std::optional<SetExpr> arg;  // constructors with a literal argument

  friend bool operator==(const Expr&, const Expr&) = default;

  static Expr leaf(Op o) { return Expr{o, {}, {}, {}}; }
  static Expr var(std::string n) { return Expr{Op::MetaVar, {}, std::move(n), {}}; }
  static Expr hole() { return leaf(Op::Hole); }
  static Expr call(Op o, SetExpr a) { return Expr{o, {}, {}, std::move(a)}; }
  static Expr binary(Op o, Expr a, Expr b) { return Expr{o, {std::move(a), std::move(b)}, {}, {}}; }
  static Expr postfix(Op o, Expr a) { return Expr{o, {std::move(a)}, {}, {}}; }
};

inline bool is_binary(Op o) { return o >= Op::Nondet && o <= Op::Seq; }
inline bool is_postfix(Op o) { return o >= Op::Star && o <= Op::OmegaSkip; }
inline bool has_arg(Op o) { return o >= Op::PStep && o <= Op::InfG; }
inline Sort arg_sort(Op o) { return (o == Op::Guard || o == Op::Pre) ? Sort::Predicate : Sort::Relation; }

/// Binding strength; higher binds tighter.
inline int precedence(Op o) {
  switch (o) {
    case Op::Nondet:
    case Op::Sup: return 1;
    case Op::Par: return 2;
    case Op::Conj: return 3;
    case Op::Quot: return 4;
    case Op::Seq: return 5;
    default: return is_postfix(o) ? 6 : 7;
  }
}

struct Keyword {
  const char* text;
  Op op;
};

inline constexpr Keyword kConstants[] = {
    {"bot", Op::Bot}, {"top", Op::Top}, {"nil", Op::Nil},
    {"skip", Op::Skip}, {"chaos", Op::Chaos}, {"term", Op::Term},
};

inline constexpr Keyword kConstructors[] = {
    {"pi", Op::PStep},     {"eps", Op::EStep},  {"epsx", Op::EStepAbort}, {"guard", Op::Guard},
    {"pre", Op::Pre},      {"atomic", Op::Atomic}, {"env", Op::EnvC},     {"spec", Op::Spec},
    {"fin", Op::FinG},     {"inf", Op::InfG},
};

inline const char* op_text(Op o) {
  for (const auto& k : kConstants) {
    if (k.op == o) return k.text;
  }
  for (const auto& k : kConstructors) {
    if (k.op == o) return k.text;
  }
  switch (o) {
    case Op::Nondet: return "|-|";
    case Op::Sup: return "|+|";
    case Op::Par: return "||";
    case Op::Conj: return "&&";
    case Op::Quot: return "//";
    case Op::Seq: return ";";
    case Op::Star: return "^*";
    case Op::Omega: return "^o";
    case Op::StarSkip: return "^*!";
    case Op::OmegaSkip: return "^o!";
    case Op::Hole: return "_";
    default: return "?";
  }
}

inline bool is_reserved(const std::string& w) {
  for (const auto& k : kConstants) {
    if (w == k.text) return true;
  }
  for (const auto& k : kConstructors) {
    if (w == k.text) return true;
  }
  return w == "id" || w == "univ" || w == "none" || w == "all" || w == "_";
}

// Printing.

namespace detail {

inline int set_prec(SetExpr::Kind k) {
  switch (k) {
    case SetExpr::Kind::Union: return 1;
    case SetExpr::Kind::Inter: return 2;
    case SetExpr::Kind::Compl: return 3;
    default: return 4;
  }
}

inline void print_set(const SetExpr& s, std::string& out) {
  using K = SetExpr::Kind;
  switch (s.kind) {
    case K::Lit: {
      out += '{';
      bool first = true;
      for (auto [a, b] : s.pairs) {
        if (!first) out += ',';
        first = false;
        out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
      for (int m : s.members) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(m);
      }
      out += '}';
      return;
    }
    case K::Id: out += "id"; return;
    case K::Univ: out += "univ"; return;
    case K::None: out += "none"; return;
    case K::All: out += "all"; return;
    case K::Var: out += s.name; return;
    case K::Compl: {
      out += '~';
      bool paren = set_prec(s.kids[0].kind) < 3;
      if (paren) out += '(';
      print_set(s.kids[0], out);
      if (paren) out += ')';
      return;
    }
    case K::Union:
    case K::Inter: {
      int p = set_prec(s.kind);
      bool lp = set_prec(s.kids[0].kind) < p;
      bool rp = set_prec(s.kids[1].kind) <= p;
      if (lp) out += '(';
      print_set(s.kids[0], out);
      if (lp) out += ')';
      out += s.kind == K::Union ? " + " : " & ";
      if (rp) out += '(';
      print_set(s.kids[1], out);
      if (rp) out += ')';
      return;
    }
  }
}

inline void print_expr(const Expr& e, std::string& out) {
  if (e.op == Op::MetaVar) {
    out += e.name;
    return;
  }
  if (has_arg(e.op)) {
    out += op_text(e.op);
    out += '(';
    print_set(*e.arg, out);
    out += ')';
    return;
  }
  if (is_postfix(e.op)) {
    bool paren = precedence(e.kids[0].op) < 6;
    if (paren) out += '(';
    print_expr(e.kids[0], out);
    if (paren) out += ')';
    out += op_text(e.op);
    return;
  }
  if (is_binary(e.op)) {
    int p = precedence(e.op);
    bool lp = precedence(e.kids[0].op) < p;
    bool rp = precedence(e.kids[1].op) <= p;
    if (lp) out += '(';
    print_expr(e.kids[0], out);
    if (lp) out += ')';
    out += e.op == Op::Seq ? " ; " : std::string(" ") + op_text(e.op) + " ";
    if (rp) out += '(';
    print_expr(e.kids[1], out);
    if (rp) out += ')';
    return;
  }
  out += op_text(e.op);
}

}  // namespace detail

inline std::string print(const SetExpr& s) {
  std::string out;
  detail::print_set(s, out);
  return out;
}

/// Minimal-parenthesis rendering; parse(print(e)) == e.
inline std::string print(const Expr& e) {
  std::string out;
  detail::print_expr(e, out);
  return out;
}

inline int count_holes(const Expr& e) {
  int n = e.op == Op::Hole ? 1 : 0;
  for (const auto& k : e.kids) n += count_holes(k);
  return n;
}

/// e with every Hole replaced by `with`.
inline Expr fill_hole(const Expr& e, const Expr& with) {
  if (e.op == Op::Hole) return with;
  Expr out = e;
  for (auto& k : out.kids) k = fill_hole(k, with);
  return out;
}

/// e with command metavariables renamed or replaced per `subst`.
template <class F>
Expr substitute(const Expr& e, F&& subst) {
  if (e.op == Op::MetaVar) {
    if (auto r = subst(e.name)) return *r;
    return e;
  }
  Expr out = e;
  for (auto& k : out.kids) k = substitute(k, subst);
  return out;
}

}  // namespace rgalg::lang
