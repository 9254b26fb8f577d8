#pragma once

#include <string>
#include <vector>

#include "rgalg/harness/checker.hpp"

namespace rgalg::harness {

namespace natives {

inline Outcome skip_case() { return {Verdict::Skip, "", "", ""}; }

inline Outcome cmp(Rel r, const Command& a, const Command& b, const std::string& d) { return CaseEnv::compare(r, a, b, d); }

/// Prefix closure of traces cut to the configured length.
inline Command from_prefixes(const ModelConfig& cfg, std::vector<Trace> ts) {
  TraceSet out;
  for (int s = 0; s < cfg.states; ++s) out.insert(Trace{s, {}});
  for (auto& t : ts) {
    if (static_cast<int>(t.steps.size()) > cfg.max_len) t.steps.resize(static_cast<std::size_t>(cfg.max_len));
    out.insert(t);
  }
  return Command::from_traces(cfg, out);
}

inline std::vector<Trace> step_traces(const StateRelation& r, bool program) {
  std::vector<Trace> ts;
  for (auto [a, b] : r.pairs()) ts.push_back(Trace{a, {program ? Step::program(b) : Step::env(b), Step::done()}});
  return ts;
}

inline NativeCheck bounds(bool infimum) {
  return [infimum](CaseEnv& env) {
    const auto& C = env.set("C");
    Command all = infimum ? nondet(C, env.cfg()) : supremum(C, env.cfg());
    for (const auto& c : C) {
      Outcome o = infimum ? cmp(Rel::Refines, all, c, "|-|C [= c") : cmp(Rel::Refines, c, all, "c [= |+|C");
      if (o.verdict == Verdict::Fail) return o;
    }
    return Outcome{};
  };
}

inline NativeCheck extremal(bool infimum) {
  return [infimum](CaseEnv& env) {
    const auto& C = env.set("C");
    const Command& d = env.cmd("d");
    for (const auto& c : C) {
      if (!(infimum ? refines(d, c) : refines(c, d))) return skip_case();
    }
    return infimum ? cmp(Rel::Refines, d, nondet(C, env.cfg()), "d [= |-|C")
                   : cmp(Rel::Refines, supremum(C, env.cfg()), d, "|+|C [= d");
  };
}

inline NativeRepair extremal_repair(bool infimum) {
  return [infimum](CaseEnv& env, Case& cs) {
    const auto& C = env.set("C");
    Command d = env.cmd("d");
    Command next = infimum ? nondet(d, nondet(C, env.cfg())) : supremum(d, supremum(C, env.cfg()));
    if (next == d) return false;
    cs.values[env.law().var_index("d")] = next;
    return true;
  };
}

/// lhs(c, op(S)) = op'({ f(c, s) | s in S }) for a set variable S and a command variable c.
template <class Whole, class Each, class Fold>
NativeCheck distribute(std::string cvar, std::string svar, std::string text, Whole whole, Each each, Fold fold) {
  return [=](CaseEnv& env) {
    const auto& S = env.set(svar);
    const Command& c = env.cmd(cvar);
    std::vector<Command> parts;
    for (const auto& s : S) parts.push_back(each(c, s));
    return cmp(Rel::Eq, whole(c, S, env.cfg()), fold(parts, env.cfg()), text);
  };
}

inline Outcome non_deterministic_choice(CaseEnv& env) {
  const auto& C = env.set("C");
  const auto& D = env.set("D");
  for (const auto& d : D) {
    bool found = false;
    for (const auto& c : C) found = found || refines(c, d);
    if (!found) return skip_case();
  }
  return cmp(Rel::Refines, nondet(C, env.cfg()), nondet(D, env.cfg()), "|-|C [= |-|D");
}

inline bool non_deterministic_choice_repair(CaseEnv& env, Case& cs) {
  auto C = env.set("C");
  bool changed = false;
  for (const auto& d : env.set("D")) {
    bool found = false;
    for (const auto& c : C) found = found || refines(c, d);
    if (!found) {
      C.push_back(d);
      changed = true;
    }
  }
  if (changed) cs.values[env.law().var_index("C")] = C;
  return changed;
}

inline std::string spec_text(const StateRelation& q) {
  std::string arms;
  for (int s = 0; s < q.states(); ++s) {
    StatePredicate post(q.states());
    for (int t = 0; t < q.states(); ++t) {
      if (q.contains(s, t)) post.add(t);
    }
    arms += (arms.empty() ? "" : " |-| ") + std::string("guard({") + std::to_string(s) + "}) ; term ; guard(" +
            (post.members().empty() ? std::string("none") : post.str()) + ")";
  }
  return "(" + arms + ") && env(id)";
}

inline const char* kQuintuple = "pre(p) ; (fin(g) && (spec(q) // fin(r))) [= c";

inline Outcome quintuple(CaseEnv& env) {
  bool left = jones_quintuple(env.pred("p"), env.rel("r"), env.rel("q"), env.rel("g"), env.cmd("c"));
  Command need = env.eval("pre(p) ; (fin(g) && (spec(q) // fin(r)))");
  Outcome right = cmp(Rel::Refines, need, env.cmd("c"), kQuintuple);
  if (left == (right.verdict == Verdict::Pass)) return {};
  if (left) {
    right.detail = "quintuple holds but " + right.detail + " fails";
    return right;
  }
  return {Verdict::Fail, "", "", std::string("refinement holds but the quintuple does not: ") + kQuintuple};
}

inline bool quintuple_repair(CaseEnv& env, Case& cs) {
  Command need = env.eval("pre(p) ; (fin(g) && (spec(q) // fin(r)))");
  Command next = supremum(env.cmd("c"), need);
  if (next == env.cmd("c")) return false;
  cs.values[env.law().var_index("c")] = next;
  return true;
}

inline bool rely_refinement_repair(CaseEnv& env, Case& cs) {
  Command next = supremum(env.cmd("d"), env.eval("c // i"));
  if (next == env.cmd("d")) return false;
  cs.values[env.law().var_index("d")] = next;
  return true;
}

}  // namespace natives

/// Every checkable law, in presentation order.
inline std::vector<LawSpec> law_catalogue() {
  using K = LawKind;
  using B = LawBuilder;
  namespace n = natives;
  std::vector<LawSpec> L;
  auto add = [&](const LawSpec& s) { L.push_back(s); };
  const std::string abort_match = "fails in the trace model: a program abort matches only a partner's environment abort";
  const std::string top_bot =
      "fails in the trace model and contradicts parallel-top-zero with conjunction-abort-zero: c0 = d1 = bot, "
      "c1 = d0 = top gives top [= bot";
  auto uses = [](const std::string& law) { return "derivation uses " + law + ", which fails in the trace model"; };

  // Lattice.
  const char* lat = "Lattice";
  add(B("infimum-associative", K::EQ, "c0 c1 c2", "c0 |-| (c1 |-| c2) = (c0 |-| c1) |-| c2", lat));
  add(B("infimum-commutes", K::EQ, "c0 c1", "c0 |-| c1 = c1 |-| c0", lat));
  add(B("infimum-idempotent", K::EQ, "c", "c |-| c = c", lat));
  add(B("supremum-associative", K::EQ, "c0 c1 c2", "c0 |+| (c1 |+| c2) = (c0 |+| c1) |+| c2", lat));
  add(B("supremum-commutes", K::EQ, "c0 c1", "c0 |+| c1 = c1 |+| c0", lat));
  add(B("supremum-idempotent", K::EQ, "c", "c |+| c = c", lat));
  add(B("infimum-absorb-supremum", K::EQ, "c0 c1", "c0 |-| (c0 |+| c1) = c0", lat));
  add(B("supremum-absorb-infimum", K::EQ, "c0 c1", "c0 |+| (c0 |-| c1) = c0", lat));

  const char* cl = "Complete lattice";
  add(B("infimum-lower-bound", K::IMPLIES, "C:set+", "c in C => |-|C [= c", cl, true).native(n::bounds(true)));
  add(B("infimum-greatest-lower-bound", K::IMPLIES, "d C:set", "(forall c in C . d [= c) => d [= |-|C", cl, true)
          .native(n::extremal(true))
          .repair(n::extremal_repair(true)));
  add(B("supremum-upper-bound", K::IMPLIES, "C:set+", "c in C => c [= |+|C", cl, true).native(n::bounds(false)));
  add(B("supremum-least-upper-bound", K::IMPLIES, "d C:set", "(forall c in C . c [= d) => |+|C [= d", cl, true)
          .native(n::extremal(false))
          .repair(n::extremal_repair(false)));
  add(B("infimum-distribute-supremum", K::EQ, "c D:set", "c |-| |+|D = |+|{d in D . c |-| d}", cl, true)
          .native(n::distribute(
              "c", "D", "c |-| |+|D = |+|{c |-| d}",
              [](const Command& c, const std::vector<Command>& D, const ModelConfig& cfg) {
                return nondet(c, supremum(D, cfg));
              },
              [](const Command& c, const Command& d) { return nondet(c, d); },
              [](const std::vector<Command>& p, const ModelConfig& cfg) { return supremum(p, cfg); })));

  const char* fp = "Fixed points";
  add(B("least-fixed-point-unfold", K::EQ, "f:ctx", "mu_f = f[mu_f]", fp));
  add(B("least-fixed-point-induction", K::IMPLIES, "f:ctx x", "f[x] [= x => mu_f [= x", fp));
  add(B("greatest-fixed-point-unfold", K::EQ, "f:ctx", "nu_f = f[nu_f]", fp));
  add(B("greatest-fixed-point-induction", K::IMPLIES, "f:ctx x", "x [= f[x] => x [= nu_f", fp));

  const char* ext = "Lattice extremes";
  add(B("bottom", K::EQ, "c", "bot = |+|{} and bot [= c", ext, true).native([](CaseEnv& env) {
    Outcome o = n::cmp(Rel::Eq, bottom(env.cfg()), supremum(std::vector<Command>{}, env.cfg()), "bot = |+|{}");
    if (o.verdict == Verdict::Fail) return o;
    return n::cmp(Rel::Refines, bottom(env.cfg()), env.cmd("c"), "bot [= c");
  }));
  add(B("supremum-identity", K::EQ, "c", "c |+| bot = c = bot |+| c", ext));
  add(B("nondet-abort-zero", K::EQ, "c", "c |-| bot = bot = bot |-| c", ext));
  add(B("nondet-identity", K::EQ, "c", "c |-| top = c = top |-| c", ext));
  add(B("supremum-magic-zero", K::EQ, "c", "c |+| top = top = top |+| c", ext));
  add(B("refinement", K::IFF, "c d", "c [= d <=> c |-| d = c", "Refinement"));
  add(B("non-deterministic-choice", K::IMPLIES, "C:set D:set", "(forall d in D . exists c in C . c [= d) => |-|C [= |-|D",
        "Choice", true)
          .native(n::non_deterministic_choice)
          .repair(n::non_deterministic_choice_repair));
  add(B("operator-monotonic", K::IMPLIES, "c0 c1 d0 d1", "c0 [= c1 and d0 [= d1 => c0 |+| d0 [= c1 |+| d1",
        "Monotonic operators")
          .note("instantiated with supremum, which distributes over binary choice"));

  const char* fus = "Fusion";
  const char* fus_note = "verified on a curated family of F, G, H only";
  add(B("fusion-lfp-leq", K::IMPLIES, "c d e k", "forall x . F[G[x]] [= H[F[x]] => F[mu_G] [= mu_H", fus)
          .variant({{"F", "c^o && _"}, {"G", "nil |-| d ; _"}, {"H", "nil |-| (c && d) ; _"}})
          .variant({{"F", "c^o! && _"}, {"G", "nil |-| d ; _"}, {"H", "nil |-| (c^o! && d) ; _"}})
          .variant({{"F", "k && _"}, {"G", "nil |-| d ; _"}, {"H", "nil |-| (k && d) ; _"}})
          .variant({{"F", "_ |-| k"}, {"G", "d |-| _"}, {"H", "(d |-| _) |+| e"}})
          .note(fus_note));
  add(B("fusion-lfp-eq", K::IMPLIES, "c d k", "forall x . F[G[x]] = H[F[x]] => F[mu_G] = mu_H", fus)
          .variant({{"F", "_ |-| k"}, {"G", "(d ; k) |-| d ; _"}, {"H", "(d ; k) |-| k |-| d ; _"}})
          .variant({{"F", "_ |-| k"}, {"G", "d |-| _"}, {"H", "d |-| _"}})
          .variant({{"F", "c && _"}, {"G", "d |+| _"}, {"H", "(c && d) |+| _"}})
          .note(fus_note));
  add(B("fusion-gfp-geq", K::IMPLIES, "d e k", "forall x . H[F[x]] [= F[G[x]] => nu_H [= F[nu_G]", fus)
          .variant({{"F", "_ ; k"}, {"G", "nil |-| d ; _"}, {"H", "k |-| d ; _ |-| e"}})
          .variant({{"F", "_ || k"}, {"G", "d |-| _"}, {"H", "(d || k) |-| _ |-| e"}})
          .note(fus_note));
  add(B("fusion-gfp-eq", K::IMPLIES, "d k", "forall x . F[G[x]] = H[F[x]] => F[nu_G] = nu_H", fus)
          .variant({{"F", "_ ; k"}, {"G", "nil |-| d ; _"}, {"H", "k |-| d ; _"}})
          .variant({{"F", "_ || k"}, {"G", "d |-| _"}, {"H", "(d || k) |-| _"}})
          .note(fus_note));

  // Concurrency axioms.
  const char* sq = "Sequential";
  add(B("sequential-associative", K::EQ, "c0 c1 c2", "c0 ; (c1 ; c2) = (c0 ; c1) ; c2", sq));
  add(B("sequential-identity-right", K::EQ, "c", "c ; nil = c", sq));
  add(B("sequential-identity-left", K::EQ, "c", "nil ; c = c", sq));
  add(B("sequential-distribute-nondet-left", K::EQ, "c d0 d1", "c ; (d0 |-| d1) = (c ; d0) |-| (c ; d1)", sq));
  add(B("sequential-distribute-nondet-right", K::EQ, "C:set d", "|-|C ; d = |-|{c in C . c ; d}", sq, true)
          .native(n::distribute(
              "d", "C", "|-|C ; d = |-|{c ; d}",
              [](const Command& d, const std::vector<Command>& C, const ModelConfig& cfg) { return seq(nondet(C, cfg), d); },
              [](const Command& d, const Command& c) { return seq(c, d); },
              [](const std::vector<Command>& p, const ModelConfig& cfg) { return nondet(p, cfg); })));
  add(B("sequential-abort-zero-left", K::EQ, "c", "bot ; c = bot", sq));
  add(B("sequential-magic-zero-left", K::EQ, "c", "top ; c = top", sq));

  const char* pa = "Parallel";
  add(B("parallel-associative", K::EQ, "c0 c1 c2", "c0 || (c1 || c2) = (c0 || c1) || c2", pa).model_gap(abort_match));
  add(B("parallel-commutes", K::EQ, "c0 c1", "c0 || c1 = c1 || c0", pa));
  add(B("parallel-identity", K::EQ, "c", "c || skip = c", pa));
  add(B("parallel-distribute", K::EQ, "C:set d", "|-|C || d = |-|{c in C . c || d}", pa, true)
          .native(n::distribute(
              "d", "C", "|-|C || d = |-|{c || d}",
              [](const Command& d, const std::vector<Command>& C, const ModelConfig& cfg) { return par(nondet(C, cfg), d); },
              [](const Command& d, const Command& c) { return par(c, d); },
              [](const std::vector<Command>& p, const ModelConfig& cfg) { return nondet(p, cfg); })));
  add(B("parallel-top-zero", K::EQ, "c", "top || c = top", pa));

  const char* id = "Identities";
  add(B("skip-skip", K::EQ, "", "skip ; skip = skip", id));
  add(B("skip-nil", K::REFINES, "", "skip [= nil", id));

  const char* wc = "Weak conjunction";
  add(B("conjunction-associative", K::EQ, "c0 c1 c2", "c0 && (c1 && c2) = (c0 && c1) && c2", wc));
  add(B("conjunction-commutes", K::EQ, "c0 c1", "c0 && c1 = c1 && c0", wc));
  add(B("conjunction-idempotent", K::EQ, "c", "c && c = c", wc));
  add(B("conjunction-identity", K::EQ, "c", "c && chaos = c", wc));
  add(B("chaos-skip", K::REFINES, "", "chaos [= skip", wc));
  add(B("chaos-parallel-chaos", K::EQ, "", "chaos || chaos = chaos", wc));
  add(B("conjunction-distribute-infimum", K::EQ, "c D:set+", "c && |-|D = |-|{d in D . c && d}, D nonempty", wc, true)
          .native(n::distribute(
              "c", "D", "c && |-|D = |-|{c && d}",
              [](const Command& c, const std::vector<Command>& D, const ModelConfig& cfg) { return conj(c, nondet(D, cfg)); },
              [](const Command& c, const Command& d) { return conj(c, d); },
              [](const std::vector<Command>& p, const ModelConfig& cfg) { return nondet(p, cfg); })));
  add(B("conjunction-distribute-supremum", K::EQ, "c D:set", "c && |+|D = |+|{d in D . c && d}", wc, true)
          .native(n::distribute(
              "c", "D", "c && |+|D = |+|{c && d}",
              [](const Command& c, const std::vector<Command>& D, const ModelConfig& cfg) { return conj(c, supremum(D, cfg)); },
              [](const Command& c, const Command& d) { return conj(c, d); },
              [](const std::vector<Command>& p, const ModelConfig& cfg) { return supremum(p, cfg); })));
  add(B("conjunction-abort-zero", K::EQ, "c", "c && bot = bot = bot && c", wc));

  const char* wx = "Weak exchange";
  add(B("conjunction-exchange-parallel", K::REFINES, "c0 c1 d0 d1",
        "(c0 || c1) && (d0 || d1) [= (c0 && d0) || (c1 && d1)", wx).model_gap(top_bot));
  add(B("conjunction-exchange-sequential", K::REFINES, "c0 c1 d0 d1",
        "(c0 ; c1) && (d0 ; d1) [= (c0 && d0) ; (c1 && d1)", wx));

  // Iteration.
  const char* it = "Iteration";
  add(B("kleene-iteration-skip", K::EQ, "c", "c^* = nu_F", it).variant({{"F", "nil |-| c ; _"}}));
  add(B("omega-iteration-skip", K::EQ, "c", "c^o = mu_F", it).variant({{"F", "nil |-| c ; _"}}));
  add(B("kleene-unfold", K::EQ, "c", "c^* = nil |-| c ; c^*", it));
  add(B("omega-unfold", K::EQ, "c", "c^o = nil |-| c ; c^o", it));
  add(B("kleene-induction", K::IMPLIES, "c d x", "x [= d |-| c ; x => x [= c^* ; d", it));
  add(B("omega-induction", K::IMPLIES, "c d x", "d |-| c ; x [= x => c^o ; d [= x", it));

  const char* mono = "Monotonicity";
  add(B("nondet-monotonic", K::IMPLIES, "c0 c1 d0 d1", "c0 [= d0 and c1 [= d1 => c0 |-| c1 [= d0 |-| d1", mono));
  add(B("parallel-monotonic", K::IMPLIES, "c0 c1 d0 d1", "c0 [= d0 and c1 [= d1 => c0 || c1 [= d0 || d1", mono));
  add(B("sequential-monotonic", K::IMPLIES, "c0 c1 d0 d1", "c0 [= d0 and c1 [= d1 => c0 ; c1 [= d0 ; d1", mono));
  add(B("conjunction-monotonic", K::IMPLIES, "c0 c1 d0 d1", "c0 [= d0 and c1 [= d1 => c0 && c1 [= d0 && d1", mono));
  add(B("kleene-monotonic", K::IMPLIES, "c d", "c [= d => c^* [= d^*", mono));
  add(B("omega-monotonic", K::IMPLIES, "c d", "c [= d => c^o [= d^o", mono));

  // Weak conjunction laws.
  const char* wl = "Weak conjunction laws";
  add(B("refine-conjunction", K::IMPLIES, "c0 c1 d", "c0 [= d and c1 [= d => c0 && c1 [= d", wl));
  add(B("refine-to-conjunction", K::IMPLIES, "c d0 d1", "c [= d0 and c [= d1 => c [= d0 && d1", wl));
  add(B("conjoin-non-aborting", K::IMPLIES, "c d", "chaos [= d => c [= c && d", wl));
  add(B("conjunction-supremum", K::REFINES, "c d", "c && d [= c |+| d", wl));
  add(B("conjunction-supremum-nonaborting", K::IMPLIES, "c d", "chaos [= c and chaos [= d => c && d = c |+| d", wl));
  add(B("conjunction-distribute-conjunction", K::EQ, "c d0 d1", "c && (d0 && d1) = (c && d0) && (c && d1)", wl));
  add(B("conjunction-distribute-parallel", K::IMPLIES, "c d0 d1",
        "c [= c || c => c && (d0 || d1) [= (c && d0) || (c && d1)", wl).model_gap(uses("conjunction-exchange-parallel")));
  add(B("conjunction-distribute-sequential", K::IMPLIES, "c d0 d1",
        "c [= c ; c => c && (d0 ; d1) [= (c && d0) ; (c && d1)", wl));
  add(B("conjunction-distribute-kleene", K::REFINES, "c d", "c^* && d^* [= (c && d)^*", wl));
  add(B("conjunction-distribute-omega", K::REFINES, "c d", "c^o && d^o [= (c && d)^o", wl));
  add(B("fusion-property", K::REFINES, "c d x", "c^o && (nil |-| d ; x) [= nil |-| (c && d) ; (c^o && x)", wl));
  add(B("guarantee-iteration", K::EQ, "c", "c^*! = c^* ; skip", wl).conclusion("c^o! = c^o ; skip"));
  add(B("omega-to-kleene", K::REFINES, "c", "c^o! [= c^*!", wl));
  add(B("omega-skip", K::REFINES, "c", "c^o! [= skip", wl));
  add(B("sequential-refines-omega", K::IMPLIES, "c", "c [= skip ; c => c^o! [= c^o! ; c^o!", wl));
  add(B("omega-refsto-omega-kleene", K::IMPLIES, "c", "c [= skip ; c => c^o! [= (c^o!)^*", wl));
  add(B("conjunction-distribute-guarantee", K::IMPLIES, "c d", "c [= skip ; c => c^o! && d^o [= (c^o! && d)^o", wl));

  // Relational model.
  const char* rm = "Relational semantics";
  add(B("semantics-program-step", K::EQ, "r:rel", "pi(r) = prefix-close {(s, [p s', done]) | (s, s') in r}", rm, true)
          .native([](CaseEnv& env) {
            return n::cmp(Rel::Eq, env.eval("pi(r)"), n::from_prefixes(env.cfg(), n::step_traces(env.rel("r"), true)),
                          "pi(r) = traces");
          }));
  add(B("semantics-env-step", K::EQ, "r:rel", "eps(r) = prefix-close {(s, [e s', done]) | (s, s') in r}", rm, true)
          .native([](CaseEnv& env) {
            return n::cmp(Rel::Eq, env.eval("eps(r)"), n::from_prefixes(env.cfg(), n::step_traces(env.rel("r"), false)),
                          "eps(r) = traces");
          }));
  add(B("semantics-env-abort", K::EQ, "r:rel", "epsx(r) = eps(r) + prefix-close {(s, [e abort])}", rm, true)
          .native([](CaseEnv& env) {
            auto ts = n::step_traces(env.rel("r"), false);
            for (int s = 0; s < env.cfg().states; ++s) ts.push_back(Trace{s, {Step::env_abort()}});
            return n::cmp(Rel::Eq, env.eval("epsx(r)"), n::from_prefixes(env.cfg(), ts), "epsx(r) = traces");
          }));
  add(B("semantics-guard", K::EQ, "p:pred", "guard(p) = prefix-close {(s, [done]) | s in p}", rm, true)
          .native([](CaseEnv& env) {
            std::vector<Trace> ts;
            for (int s : env.pred("p").members()) ts.push_back(Trace{s, {Step::done()}});
            return n::cmp(Rel::Eq, env.eval("guard(p)"), n::from_prefixes(env.cfg(), ts), "guard(p) = traces");
          }));
  add(B("semantics-abort", K::EQ, "", "bot = all traces", rm, true).native([](CaseEnv& env) {
    auto all = enumerate_universe(env.cfg());
    return n::cmp(Rel::Eq, bottom(env.cfg()), n::from_prefixes(env.cfg(), {all.begin(), all.end()}), "bot = traces");
  }));
  add(B("semantics-magic", K::EQ, "", "top = {(s, [])}", rm, true).native([](CaseEnv& env) {
    return n::cmp(Rel::Eq, top(env.cfg()), n::from_prefixes(env.cfg(), {}), "top = traces");
  }));
  add(B("nil", K::EQ, "", "nil = guard(all)", rm));
  add(B("semantics-skip", K::EQ, "", "skip = epsx(univ)^o", rm));
  add(B("semantics-atomicrel", K::EQ, "r:rel", "atomic(r) = skip ; pi(r) ; skip", rm));
  add(B("semantics-precondition", K::EQ, "p:pred", "pre(p) = guard(p) |-| guard(~p) ; bot", rm));
  add(B("semantics-env", K::EQ, "r:rel", "env(r) = (pi(univ) |-| epsx(r))^o ; (nil |-| eps(~r) ; bot)", rm));
  add(B("weaken-precondition", K::IFF, "p0:pred p1:pred", "p0 <= p1 <=> pre(p0) [= pre(p1)", rm));
  add(B("weaken-environment", K::IFF, "r0:rel r1:rel", "r0 <= r1 <=> env(r0) [= env(r1)", rm));
  add(B("strengthen-postcondition-atomic", K::IFF, "q0:rel q1:rel", "q1 <= q0 <=> atomic(q0) [= atomic(q1)", rm));

  const char* rc = "Relational weak conjunction";
  add(B("atomic-conjoin-atomic", K::EQ, "g:rel r:rel", "atomic(g) && atomic(r) = atomic(g & r)", rc));
  add(B("non-skip-conjoin-non-skip", K::IMPLIES, "g:rel r:rel c d",
        "skip ; c = c and skip ; d = d => atomic(g) ; c && atomic(r) ; d = atomic(g & r) ; (c && d)", rc)
          .note("holds only when c and d admit leading environment steps"));
  add(B("skip-conjoin-non-skip", K::EQ, "g:rel c", "skip && atomic(g) ; c = skip ; top", rc));
  add(B("semantics-chaos", K::EQ, "", "chaos = inf(univ)", rc));
  add(B("semantics-term", K::EQ, "", "term = fin(univ)", rc));
  add(B("strengthen-postcondition-atomic-kleene", K::IMPLIES, "r0:rel r1:rel", "r1 <= r0 => fin(r0) [= fin(r1)", rc));
  add(B("strengthen-postcondition-atomic-omega", K::IMPLIES, "r0:rel r1:rel", "r1 <= r0 => inf(r0) [= inf(r1)", rc));
  add(B("parallel-atomic-kleene", K::EQ, "r0:rel r1:rel", "fin(r0 + r1) = fin(r0) || fin(r1)", rc));
  add(B("parallel-atomic-omega2", K::REFINES, "r0:rel r1:rel", "inf(r0 + r1) [= inf(r0) || inf(r1)", rc));
  add(B("parallel-atomic-omega1", K::EQ, "r:rel", "inf(r) = inf(r) || inf(r)", rc));
  add(B("precondition-conjunction", K::EQ, "p:pred c d", "pre(p) ; (c && d) = (pre(p) ; c) && (pre(p) ; d)", rc));
  add(B("precondition-parallel", K::EQ, "p:pred c d", "pre(p) ; (c || d) = (pre(p) ; c) || (pre(p) ; d)", rc));
  add(B("spec-definition", K::EQ, "q:rel",
        "spec(q) = |-|{s . guard({s}) ; term ; guard({s' | (s, s') in q})} && env(id)", rc, true)
          .native([](CaseEnv& env) {
            return n::cmp(Rel::Eq, env.eval("spec(q)"), env.eval(n::spec_text(env.rel("q"))), "spec(q) = definition");
          }));
  add(B("spec-conjoin-spec", K::EQ, "q0:rel q1:rel", "spec(q0) && spec(q1) = spec(q0 & q1)", rc));

  const char* rp = "Relational provisos";
  add(B("c-to-c-parallel-c", K::REFINES, "g:rel", "inf(g) [= inf(g) || inf(g)", rp));
  add(B("c-to-c-seq-c", K::REFINES, "g:rel", "inf(g) [= inf(g) ; inf(g)", rp));
  add(B("c-nil", K::REFINES, "g:rel", "inf(g) [= nil", rp));
  add(B("i-parallel-i-to-i", K::REFINES, "r:rel", "fin(r) || fin(r) [= fin(r)", rp));
  add(B("c-par-i-seq-d-par-i-to-c-seq-d-par-i", K::REFINES, "c0 c1 r:rel",
        "(c0 || fin(r)) ; (c1 || fin(r)) [= (c0 ; c1) || fin(r)", rp));
  add(B("parallel-atomic-omega3", K::EQ, "r0:rel r1:rel", "inf(r0 + r1) = inf(r0) || inf(r1)", rp));

  // Guarantees.
  const char* gu = "Guarantees";
  add(B("guarantee-strengthen", K::IMPLIES, "g0:rel g1:rel c", "g0 <= g1 => inf(g1) && c [= inf(g0) && c", gu));
  add(B("guarantee-introduce", K::REFINES, "g:rel c", "c [= inf(g) && c", gu));
  add(B("conjunction-atomic-iterated", K::EQ, "g0:rel g1:rel", "inf(g0) && inf(g1) = inf(g0 & g1)", gu));
  add(B("guarantee-nested", K::EQ, "g0:rel g1:rel c", "inf(g0) && inf(g1) && c = inf(g0 & g1) && c", gu));
  add(B("guarantee-distribute-nondet", K::EQ, "g:rel c d", "inf(g) && (c |-| d) = (inf(g) && c) |-| (inf(g) && d)", gu));
  add(B("guarantee-distribute-conjunction", K::EQ, "g:rel c d",
        "inf(g) && (c && d) = (inf(g) && c) && (inf(g) && d)", gu));
  add(B("guarantee-distribute-parallel", K::REFINES, "g:rel c d",
        "inf(g) && (c || d) [= (inf(g) && c) || (inf(g) && d)", gu).model_gap(uses("conjunction-distribute-parallel")));
  add(B("guarantee-distribute-sequential", K::REFINES, "g:rel c d",
        "inf(g) && (c ; d) [= (inf(g) && c) ; (inf(g) && d)", gu));
  add(B("guarantee-distribute-kleene", K::REFINES, "g:rel c", "inf(g) && c^* [= (inf(g) && c)^*", gu));
  add(B("guarantee-distribute-omega", K::REFINES, "g:rel c", "inf(g) && c^o [= (inf(g) && c)^o", gu));

  // Rely quotients.
  const char* rq = "Rely quotient";
  add(B("rely-quotient", K::REFINES, "c i:int", "c [= (c // i) || i", rq));
  add(B("rely-refinement", K::IFF, "c i:int d", "c // i [= d <=> c [= d || i", rq).repair(n::rely_refinement_repair));
  add(B("rely-identity-right", K::EQ, "c", "c // skip = c", rq));
  add(B("rely-monotonic", K::IMPLIES, "c d i:int", "c [= d => c // i [= d // i", rq));
  add(B("rely-weaken", K::IMPLIES, "c i:int j:int", "i [= j => c // j [= c // i", rq));
  add(B("rely-nested", K::EQ, "c i:int j:int", "(c // j) // i = c // (i || j)", rq).model_gap(uses("parallel-associative")));
  add(B("rely-nested-rel", K::EQ, "c r0:rel r1:rel",
        "(c // fin(r1)) // fin(r0) = c // (fin(r0) || fin(r1)) = c // fin(r0 + r1)", rq));

  const char* pi = "Parallel introduction";
  add(B("parallel-introduce", K::REFINES, "c d i:int j:int", "c && d [= (j && (c // i)) || (i && (d // j))", pi).model_gap(uses("conjunction-exchange-parallel")));
  add(B("rely-distribute-conjunction", K::REFINES, "c d i:int", "(c && d) // i [= (c // i) && (d // i)", pi).model_gap(uses("conjunction-exchange-parallel")));
  add(B("rely-distribute-choice", K::REFINES, "c d i:int", "(c |-| d) // i [= (c // i) |-| (d // i)", pi));
  add(B("rely-distribute-parallel-a", K::REFINES, "c d i:int j:int", "(c || d) // (i || j) [= (c // i) || (d // j)", pi).model_gap(uses("parallel-associative")));
  add(B("rely-distribute-parallel-b", K::IMPLIES, "c d i:int", "i || i [= i => (c || d) // i [= (c // i) || (d // i)", pi).model_gap(uses("parallel-associative")));
  add(B("rely-distribute-sequential", K::IMPLIES, "c d i:int",
        "forall c0 c1 . (c0 || i) ; (c1 || i) [= (c0 ; c1) || i => (c ; d) // i [= (c // i) ; (d // i)", pi));
  add(B("rely-distribute-iteration", K::IMPLIES, "c d i:int",
        "forall c0 c1 . (c0 || i) ; (c1 || i) [= (c0 ; c1) || i => (c^o ; d) // i [= (c // i)^o ; (d // i)", pi));
  add(B("parallel-introduce-with-rely", K::REFINES, "c d i:int j0:int j1:int",
        "(c && d) // i [= (j1 && (c // (j0 || i))) || (j0 && (d // (j1 || i)))", pi).model_gap(uses("parallel-introduce")));
  add(B("parallel-introduce-with-rely-guarantee", K::REFINES, "c d i:int j0:int j1:int",
        "(j1 || j0) && (c && d) // i [= (j1 && (c // (j0 || i))) || (j0 && (d // (j1 || i)))", pi).model_gap(uses("parallel-introduce")));
  add(B("parallel-introduce-relational", K::REFINES, "c d g:rel r:rel",
        "c && d [= (fin(g) && (c // fin(r))) || (fin(r) && (d // fin(g)))", pi));
  add(B("parallel-specification", K::REFINES, "p:pred q0:rel q1:rel g:rel r:rel",
        "pre(p) ; spec(q0 & q1) [= pre(p) ; (fin(g) && (spec(q0) // fin(r))) || pre(p) ; (fin(r) && (spec(q1) // fin(g)))",
        pi));
  add(B("quintuple-as-refinement", K::IFF, "p:pred r:rel q:rel g:rel c",
        "quintuple(p, r, c, g, q) <=> pre(p) ; (fin(g) && (spec(q) // fin(r))) [= c", "Quintuple", true)
          .native(n::quintuple)
          .repair(n::quintuple_repair));
  return L;
}

/// Laws with a proviso removed, each expected to fail.
struct NegativeSpec {
  LawSpec law;
  std::string base;
};

inline std::vector<NegativeSpec> negative_catalogue() {
  using K = LawKind;
  using B = LawBuilder;
  const char* st = "Stripped proviso";
  std::vector<NegativeSpec> N;
  auto add = [&](const LawSpec& s, const char* base) { N.push_back({s, base}); };
  add(B("conjunction-distribute-parallel-stripped", K::REFINES, "c d0 d1",
        "c && (d0 || d1) [= (c && d0) || (c && d1)", st),
      "conjunction-distribute-parallel");
  add(B("conjunction-distribute-sequential-stripped", K::REFINES, "c d0 d1",
        "c && (d0 ; d1) [= (c && d0) ; (c && d1)", st),
      "conjunction-distribute-sequential");
  add(B("conjunction-distribute-guarantee-stripped", K::REFINES, "c d", "c^o! && d^o [= (c^o! && d)^o", st),
      "conjunction-distribute-guarantee");
  add(B("rely-distribute-parallel-b-stripped", K::REFINES, "c d i", "(c || d) // i [= (c // i) || (d // i)", st),
      "rely-distribute-parallel-b");
  add(B("rely-distribute-sequential-stripped", K::REFINES, "c d i", "(c ; d) // i [= (c // i) ; (d // i)", st),
      "rely-distribute-sequential");
  add(B("conjoin-non-aborting-stripped", K::REFINES, "c d", "c [= c && d", st), "conjoin-non-aborting");
  add(B("conjunction-supremum-nonaborting-stripped", K::EQ, "c d", "c && d = c |+| d", st),
      "conjunction-supremum-nonaborting");
  return N;
}

inline std::vector<NegativeResult> negative_suite(const Pools& pools, const std::string& filter = "") {
  std::vector<NegativeResult> out;
  for (const auto& n : negative_catalogue()) {
    if (!name_matches(n.law.name, filter) && !name_matches(n.base, filter)) continue;
    NegativeResult r;
    r.name = n.law.name;
    r.base = n.base;
    r.report = check_law(n.law, pools);
    r.as_expected = r.report.status == "fail";
    out.push_back(std::move(r));
  }
  return out;
}

inline Report run_suite(const GenConfig& g, const std::string& filter = "", bool negative = false) {
  Pools pools(g);
  Report rep;
  rep.config = g;
  rep.laws = check_laws(law_catalogue(), pools, filter);
  if (negative) {
    rep.ran_negative = true;
    rep.negative = negative_suite(pools, filter);
  }
  return rep;
}

}  // namespace rgalg::harness
