#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "rgalg/lang/eval.hpp"

namespace rgalg::harness {

enum class GenMode { ExhaustivePool, Random };

struct GenConfig {
  ModelConfig cfg{2, 3};
  int term_depth = 2;
  std::vector<StateRelation> relation_alphabet;  // empty: default_alphabet(cfg.states)
  std::size_t samples = 2000;
  std::uint64_t seed = 0;
  GenMode mode = GenMode::ExhaustivePool;
  std::size_t exhaustive_budget = 200000;  // max case-product enumerated exhaustively
  std::size_t level_budget = 60000;        // max candidate terms evaluated per depth level
  std::size_t random_sets = 32;            // seeded random closed sets added to the pool
  std::size_t forall_pool = 200;           // values for quantified provisos: atoms first, then spread samples
  std::size_t forall_budget = 20000;       // max tuples per quantified proviso
  std::size_t forall_sweep = 1000;         // values each quantified variable sweeps with the others on constants
  std::size_t max_counterexamples = 3;
};

/// Every relation for N <= 2, otherwise none/id/univ.
inline std::vector<StateRelation> default_alphabet(int n) {
  if (n <= 2) return StateRelation::all(n);
  return {StateRelation::empty(n), StateRelation::identity(n), StateRelation::universal(n)};
}

/// Every predicate for N <= 4, otherwise none/all.
inline std::vector<StatePredicate> predicate_alphabet(int n) {
  if (n <= 4) return StatePredicate::all(n);
  return {StatePredicate::empty(n), StatePredicate::all_states(n)};
}

inline std::vector<StateRelation> alphabet_of(const GenConfig& g) {
  return g.relation_alphabet.empty() ? default_alphabet(g.cfg.states) : g.relation_alphabet;
}

/// Deduplicated commands with the text of the first term that produced each.
struct Pool {
  std::vector<Command> items;
  std::vector<std::string> text;  // empty for random sets
  std::unordered_map<Bits, std::size_t, BitsHash> index;
  std::size_t atoms = 0;       // items[0, atoms) come from depth-0 terms
  std::size_t constants = 0;   // items[0, constants) are the constant commands
  std::size_t shallow = 0;     // items[0, shallow) come from terms of depth <= 1

  bool add(const Command& c, std::string t) {
    auto [it, fresh] = index.emplace(c.bits(), items.size());
    if (!fresh) return false;
    items.push_back(c);
    text.push_back(std::move(t));
    return true;
  }
  std::size_t size() const { return items.size(); }
  const std::string* find_text(const Command& c) const {
    auto it = index.find(c.bits());
    if (it == index.end() || text[it->second].empty()) return nullptr;
    return &text[it->second];
  }
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace detail

/// Depth-0 terms: constants and constructors over the alphabets.
inline std::vector<lang::Expr> atom_terms(const GenConfig& g) {
  using lang::Expr;
  using lang::Op;
  using lang::SetExpr;
  std::vector<Expr> out;
  for (const auto& k : lang::kConstants) out.push_back(Expr::leaf(k.op));
  auto rel_lit = [](const StateRelation& r) {
    SetExpr s = SetExpr::leaf(SetExpr::Kind::Lit);
    s.pairs = r.pairs();
    return s;
  };
  auto pred_lit = [](const StatePredicate& p) {
    SetExpr s = SetExpr::leaf(SetExpr::Kind::Lit);
    s.members = p.members();
    return s;
  };
  for (const auto& k : lang::kConstructors) {
    if (lang::arg_sort(k.op) == lang::Sort::Relation) {
      for (const auto& r : alphabet_of(g)) out.push_back(Expr::call(k.op, rel_lit(r)));
    } else {
      for (const auto& p : predicate_alphabet(g.cfg.states)) out.push_back(Expr::call(k.op, pred_lit(p)));
    }
  }
  return out;
}

/// All DSL terms up to g.term_depth (levels above g.level_budget are sampled), then random closed sets.
inline Pool gen_commands(const GenConfig& g) {
  using lang::Expr;
  using lang::Op;
  Universe::get(g.cfg);  // capacity check
  Pool pool;
  std::vector<Expr> exprs;
  for (const auto& e : atom_terms(g)) {
    if (pool.add(lang::eval(e, {}, g.cfg), lang::print(e))) exprs.push_back(e);
    if (!lang::has_arg(e.op)) pool.constants = pool.size();
  }
  pool.atoms = pool.size();
  std::mt19937_64 rng(g.seed ^ 0x5eedf00dull);
  static const Op post[] = {Op::Star, Op::Omega, Op::StarSkip, Op::OmegaSkip};
  static const Op bin[] = {Op::Nondet, Op::Sup, Op::Par, Op::Conj, Op::Quot, Op::Seq};
  std::size_t old_end = 0;
  for (int level = 1; level <= g.term_depth; ++level) {
    std::size_t n = pool.size();
    std::size_t fresh = n - old_end;
    if (fresh == 0) break;
    auto try_post = [&](Op o, std::size_t a) {
      Command c = o == Op::Star ? star(pool.items[a])
                  : o == Op::Omega ? omega(pool.items[a])
                  : o == Op::StarSkip ? star_skip(pool.items[a])
                                      : omega_skip(pool.items[a]);
      if (pool.index.count(c.bits())) return;
      Expr e = Expr::postfix(o, exprs[a]);
      if (pool.add(c, lang::print(e))) exprs.push_back(e);
    };
    auto try_bin = [&](Op o, std::size_t a, std::size_t b) {
      const Command& x = pool.items[a];
      const Command& y = pool.items[b];
      Command c = o == Op::Nondet ? nondet(x, y)
                  : o == Op::Sup ? supremum(x, y)
                  : o == Op::Par ? par(x, y)
                  : o == Op::Conj ? conj(x, y)
                  : o == Op::Quot ? quotient(x, y)
                                  : seq(x, y);
      if (pool.index.count(c.bits())) return;
      Expr e = Expr::binary(o, exprs[a], exprs[b]);
      if (pool.add(c, lang::print(e))) exprs.push_back(e);
    };
    double candidates = 4.0 * static_cast<double>(fresh) +
                        6.0 * (static_cast<double>(n) * n - static_cast<double>(old_end) * old_end);
    if (candidates <= static_cast<double>(g.level_budget)) {
      for (Op o : post) {
        for (std::size_t a = old_end; a < n; ++a) try_post(o, a);
      }
      for (Op o : bin) {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = (a >= old_end ? 0 : old_end); b < n; ++b) try_bin(o, a, b);
        }
      }
    } else {
      for (std::size_t k = 0; k < g.level_budget; ++k) {
        std::size_t which = detail::pick(rng, 10);
        std::size_t a = old_end + detail::pick(rng, fresh);
        if (which < 4) {
          try_post(post[which], a);
          continue;
        }
        std::size_t b = detail::pick(rng, n);
        if (detail::pick(rng, 2)) std::swap(a, b);
        try_bin(bin[which - 4], a, b);
      }
    }
    old_end = n;
    if (level == 1) pool.shallow = pool.size();
  }
  if (g.term_depth < 1) pool.shallow = pool.size();
  auto u = Universe::get(g.cfg);
  for (std::size_t k = 0; k < g.random_sets; ++k) {
    Bits b = u->empty_set();
    std::size_t m = 1 + detail::pick(rng, 6);
    for (std::size_t j = 0; j < m; ++j) b.set(detail::pick(rng, u->size()));
    pool.add(Command::closure_of(u, b), "");
  }
  return pool;
}

/// Divisor-shaped interference processes: guarantee iterations, skip and friends.
inline Pool gen_interference(const GenConfig& g) {
  Pool pool;
  const auto rels = alphabet_of(g);
  auto add = [&](const std::string& t) { pool.add(lang::eval(t, {}, g.cfg), t); };
  for (const char* t : {"skip", "top", "term", "chaos", "nil"}) add(t);
  auto lit = [](const StateRelation& r) { return r.str(); };
  for (const auto& r : rels) add("fin(" + lit(r) + ")");
  for (const auto& r : rels) add("inf(" + lit(r) + ")");
  for (std::size_t a = 0; a < rels.size() && a < 6; ++a) {
    for (std::size_t b = 0; b < rels.size() && b < 6; ++b) {
      add("fin(" + lit(rels[a]) + ") ; fin(" + lit(rels[b]) + ")");
    }
  }
  return pool;
}

/// Monotone one-hole context templates; parameters are k and k2.
inline const std::vector<std::string>& context_templates() {
  static const std::vector<std::string> t = {
      "nil |-| k ; _", "k |-| _ ; k2", "k ; _",         "_ ; k",       "k || _",
      "k && _",        "k |-| _",      "_ |+| k",       "skip |-| k ; _ ; k2", "k ; _^o",
      "(k |-| _)^*",   "_ // k",       "k && (nil |-| _ ; k2)",
  };
  return t;
}

inline int context_params(const std::string& tmpl) { return tmpl.find("k2") != std::string::npos ? 2 : 1; }

}  // namespace rgalg::harness
