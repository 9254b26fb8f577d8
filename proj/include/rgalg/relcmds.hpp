#pragma once

#include <string>
#include <vector>

#include "rgalg/quotient.hpp"
#include "rgalg/relation.hpp"

namespace rgalg {

namespace detail {
inline Command two_step(const ModelConfig& cfg, const StateRelation& r, bool program) {
  require_states(r.states(), cfg);
  auto u = Universe::get(cfg);
  return u->memo<Command>(std::string(program ? "pi:" : "eps:") + r.key(), [&] {
    Bits b = u->roots();
    for (auto [a, t] : r.pairs()) {
      auto x = u->root(a);
      if (!u->extendable(x)) continue;
      int code = program ? u->code_program(t) : u->code_env(t);
      auto y = u->child(x, code);
      b.set(y);
      if (u->extendable(y)) b.set(u->child(y, u->code_done()));
    }
    return Command::closure_of(u, b);
  });
}
}  // namespace detail

/// π(r): one program step in r, then terminate.
inline Command pstep(const StateRelation& r, const ModelConfig& cfg) { return detail::two_step(cfg, r, true); }

/// ε(r): one environment step in r, then terminate.
inline Command estep(const StateRelation& r, const ModelConfig& cfg) { return detail::two_step(cfg, r, false); }

/// ε(r) plus an immediate environment abort from any state.
inline Command estep_abort(const StateRelation& r, const ModelConfig& cfg) {
  auto u = Universe::get(cfg);
  Bits b = estep(r, cfg).bits();
  for (int s = 0; s < u->states(); ++s) {
    if (u->extendable(u->root(s))) b.set(u->child(u->root(s), u->code_eabort()));
  }
  return Command::closure_of(u, b);
}

/// τ(p): terminate immediately from states in p.
inline Command guard(const StatePredicate& p, const ModelConfig& cfg) {
  require_states(p.states(), cfg);
  auto u = Universe::get(cfg);
  Bits b = u->roots();
  for (int s : p.members()) {
    if (u->extendable(u->root(s))) b.set(u->child(u->root(s), u->code_done()));
  }
  return Command::closure_of(u, b);
}

inline Command nil(const ModelConfig& cfg) { return nil_cmd(cfg); }

/// skip = ε(univ)^ω with environment aborts allowed.
inline Command skip_cmd(const ModelConfig& cfg) {
  auto u = Universe::get(cfg);
  return u->memo<Command>("skip", [&] { return omega(estep_abort(StateRelation::universal(cfg.states), cfg)); });
}

inline Command star_skip(const Command& c) { return seq(star(c), skip_cmd(c.config())); }
inline Command omega_skip(const Command& c) { return seq(omega(c), skip_cmd(c.config())); }

/// ⟨r⟩ = skip ; π(r) ; skip
inline Command atomic(const StateRelation& r, const ModelConfig& cfg) {
  auto u = Universe::get(cfg);
  return u->memo<Command>("atomic:" + r.key(), [&] {
    Command s = skip_cmd(cfg);
    return seq(seq(s, pstep(r, cfg)), s);
  });
}

/// {p} = τ(p) ⊓ τ(¬p) ; ⊥
inline Command precond(const StatePredicate& p, const ModelConfig& cfg) {
  return nondet(guard(p, cfg), seq(guard(p.complement(), cfg), bottom(cfg)));
}

/// Environment constrained to r; any environment step outside r aborts.
inline Command envc(const StateRelation& r, const ModelConfig& cfg) {
  auto u = Universe::get(cfg);
  return u->memo<Command>("envc:" + r.key(), [&] {
    int n = cfg.states;
    Command body = omega(nondet(pstep(StateRelation::universal(n), cfg), estep_abort(r, cfg)));
    Command tail = nondet(nil(cfg), seq(estep(r.complement(), cfg), bottom(cfg)));
    return seq(body, tail);
  });
}

/// FinGuar r = ⟨r⟩^⋆ ; skip
inline Command fin_guar(const StateRelation& r, const ModelConfig& cfg) {
  auto u = Universe::get(cfg);
  return u->memo<Command>("fin:" + r.key(), [&] { return star_skip(atomic(r, cfg)); });
}

/// InfGuar r = ⟨r⟩^ω ; skip
inline Command inf_guar(const StateRelation& r, const ModelConfig& cfg) {
  auto u = Universe::get(cfg);
  return u->memo<Command>("inf:" + r.key(), [&] { return omega_skip(atomic(r, cfg)); });
}

inline Command chaos_cmd(const ModelConfig& cfg) { return inf_guar(StateRelation::universal(cfg.states), cfg); }
inline Command term_cmd(const ModelConfig& cfg) { return fin_guar(StateRelation::universal(cfg.states), cfg); }

/// Specification command for postcondition q under an identity environment.
inline Command spec_cmd(const StateRelation& q, const ModelConfig& cfg) {
  auto u = Universe::get(cfg);
  return u->memo<Command>("spec:" + q.key(), [&] {
    int n = cfg.states;
    Command t = term_cmd(cfg);
    std::vector<Command> arms;
    for (int s = 0; s < n; ++s) {
      StatePredicate post(n);
      for (int s2 = 0; s2 < n; ++s2) {
        if (q.contains(s, s2)) post.add(s2);
      }
      arms.push_back(seq(seq(guard(StatePredicate::from_states(n, {s}), cfg), t), guard(post, cfg)));
    }
    return conj(nondet(arms, cfg), envc(StateRelation::identity(n), cfg));
  });
}

/// Quintuple as a refinement: impl meets precondition p, rely r,
/// postcondition q and guarantee g.
inline bool jones_quintuple(const StatePredicate& p, const StateRelation& r, const StateRelation& q,
                            const StateRelation& g, const Command& impl) {
  const ModelConfig& cfg = impl.config();
  Command need = seq(precond(p, cfg), conj(fin_guar(g, cfg), quotient(spec_cmd(q, cfg), fin_guar(r, cfg))));
  return refines(need, impl);
}

}  // namespace rgalg
