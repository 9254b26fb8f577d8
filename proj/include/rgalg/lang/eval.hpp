#pragma once

#include <map>
#include <string>
#include <variant>

#include "rgalg/fixpoint.hpp"
#include "rgalg/lang/expr.hpp"
#include "rgalg/lang/parser.hpp"
#include "rgalg/relcmds.hpp"

namespace rgalg::lang {

struct EvalError : Error {
  using Error::Error;
};

using Value = std::variant<Command, StateRelation, StatePredicate>;

/// Metavariable assignment.
struct Binding {
  std::map<std::string, Value> values;

  Binding& set(const std::string& n, Value v) {
    values.insert_or_assign(n, std::move(v));
    return *this;
  }
  const Value* find(const std::string& n) const {
    auto it = values.find(n);
    return it == values.end() ? nullptr : &it->second;
  }
};

namespace detail {

inline void check_state(int s, const ModelConfig& cfg) {
  if (s < 0 || s >= cfg.states) {
    throw EvalError("state " + std::to_string(s) + " out of range for " + std::to_string(cfg.states) + " states");
  }
}

inline StateRelation eval_rel(const SetExpr& s, const Binding& b, const ModelConfig& cfg) {
  using K = SetExpr::Kind;
  int n = cfg.states;
  switch (s.kind) {
    case K::Lit: {
      for (auto [x, y] : s.pairs) {
        check_state(x, cfg);
        check_state(y, cfg);
      }
      return StateRelation::from_pairs(n, s.pairs);
    }
    case K::Id: return StateRelation::identity(n);
    case K::Univ: return StateRelation::universal(n);
    case K::None: return StateRelation::empty(n);
    case K::All: throw EvalError("'all' is a predicate, not a relation");
    case K::Var: {
      const Value* v = b.find(s.name);
      if (!v) throw EvalError("unbound metavariable '" + s.name + "'");
      auto r = std::get_if<StateRelation>(v);
      if (!r) throw EvalError("metavariable '" + s.name + "' is not bound to a relation");
      require_states(r->states(), cfg);
      return *r;
    }
    case K::Union: return eval_rel(s.kids[0], b, cfg).unite(eval_rel(s.kids[1], b, cfg));
    case K::Inter: return eval_rel(s.kids[0], b, cfg).intersect(eval_rel(s.kids[1], b, cfg));
    case K::Compl: return eval_rel(s.kids[0], b, cfg).complement();
  }
  throw EvalError("bad relation expression");
}

inline StatePredicate eval_pred(const SetExpr& s, const Binding& b, const ModelConfig& cfg) {
  using K = SetExpr::Kind;
  int n = cfg.states;
  switch (s.kind) {
    case K::Lit: {
      for (int x : s.members) check_state(x, cfg);
      return StatePredicate::from_states(n, s.members);
    }
    case K::All: return StatePredicate::all_states(n);
    case K::None: return StatePredicate::empty(n);
    case K::Id:
    case K::Univ: throw EvalError("'id'/'univ' are relations, not predicates");
    case K::Var: {
      const Value* v = b.find(s.name);
      if (!v) throw EvalError("unbound metavariable '" + s.name + "'");
      auto p = std::get_if<StatePredicate>(v);
      if (!p) throw EvalError("metavariable '" + s.name + "' is not bound to a predicate");
      require_states(p->states(), cfg);
      return *p;
    }
    case K::Union: return eval_pred(s.kids[0], b, cfg).unite(eval_pred(s.kids[1], b, cfg));
    case K::Inter: return eval_pred(s.kids[0], b, cfg).intersect(eval_pred(s.kids[1], b, cfg));
    case K::Compl: return eval_pred(s.kids[0], b, cfg).complement();
  }
  throw EvalError("bad predicate expression");
}

}  // namespace detail

inline StateRelation eval_relation(const SetExpr& s, const Binding& b, const ModelConfig& cfg) {
  return detail::eval_rel(s, b, cfg);
}

inline StatePredicate eval_predicate(const SetExpr& s, const Binding& b, const ModelConfig& cfg) {
  return detail::eval_pred(s, b, cfg);
}

/// Denotation of a hole-free expression.
inline Command eval(const Expr& e, const Binding& b, const ModelConfig& cfg) {
  auto rel = [&] { return detail::eval_rel(*e.arg, b, cfg); };
  auto pred = [&] { return detail::eval_pred(*e.arg, b, cfg); };
  auto kid = [&](int i) { return eval(e.kids[static_cast<std::size_t>(i)], b, cfg); };
  switch (e.op) {
    case Op::Bot: return bottom(cfg);
    case Op::Top: return top(cfg);
    case Op::Nil: return nil(cfg);
    case Op::Skip: return skip_cmd(cfg);
    case Op::Chaos: return chaos_cmd(cfg);
    case Op::Term: return term_cmd(cfg);
    case Op::PStep: return pstep(rel(), cfg);
    case Op::EStep: return estep(rel(), cfg);
    case Op::EStepAbort: return estep_abort(rel(), cfg);
    case Op::Guard: return guard(pred(), cfg);
    case Op::Pre: return precond(pred(), cfg);
    case Op::Atomic: return atomic(rel(), cfg);
    case Op::EnvC: return envc(rel(), cfg);
    case Op::Spec: return spec_cmd(rel(), cfg);
    case Op::FinG: return fin_guar(rel(), cfg);
    case Op::InfG: return inf_guar(rel(), cfg);
    case Op::Nondet: return nondet(kid(0), kid(1));
    case Op::Sup: return supremum(kid(0), kid(1));
    case Op::Par: return par(kid(0), kid(1));
    case Op::Conj: return conj(kid(0), kid(1));
    case Op::Quot: return quotient(kid(0), kid(1));
    case Op::Seq: return seq(kid(0), kid(1));
    case Op::Star: return star(kid(0));
    case Op::Omega: return omega(kid(0));
    case Op::StarSkip: return star_skip(kid(0));
    case Op::OmegaSkip: return omega_skip(kid(0));
    case Op::MetaVar: {
      const Value* v = b.find(e.name);
      if (!v) throw EvalError("unbound metavariable '" + e.name + "'");
      auto c = std::get_if<Command>(v);
      if (!c) throw EvalError("metavariable '" + e.name + "' is not bound to a command");
      if (!(c->config() == cfg)) throw ConfigMismatch("metavariable '" + e.name + "' bound under another config");
      return *c;
    }
    case Op::Hole: throw EvalError("cannot evaluate an expression containing a hole");
  }
  throw EvalError("bad expression");
}

inline Command eval(std::string_view text, const Binding& b, const ModelConfig& cfg) {
  return eval(parse(text), b, cfg);
}

/// x ↦ eval(e[_ := x]); e must contain exactly one hole.
inline CommandTransformer to_transformer(const Expr& e, const Binding& b, const ModelConfig& cfg) {
  int holes = count_holes(e);
  if (holes != 1) throw EvalError("transformer context needs exactly one hole, found " + std::to_string(holes));
  const std::string slot = "\x01hole";
  Expr body = fill_hole(e, Expr::var(slot));
  return [body, b, cfg, slot](const Command& x) {
    Binding bx = b;
    bx.set(slot, x);
    return eval(body, bx, cfg);
  };
}

}  // namespace rgalg::lang
