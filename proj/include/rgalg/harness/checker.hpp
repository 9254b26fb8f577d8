#pragma once

#include <fnmatch.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "rgalg/harness/generator.hpp"
#include "rgalg/harness/law.hpp"

namespace rgalg::harness {

struct Counterexample {
  std::vector<std::pair<std::string, std::string>> bindings;
  std::string witness, side, detail;

  std::string key() const {
    std::string k;
    for (const auto& [n, v] : bindings) k += n + "=" + v + "\x1f";
    return k + witness + "\x1f" + side + "\x1f" + detail;
  }
};

struct LawReport {
  std::string name, provenance, kind, status, note;
  bool model_gap = false;
  std::size_t cases_checked = 0;
  std::size_t cases_proviso_skipped = 0;
  std::string coverage_mode;  // exhaustive, stratified, sampled
  double space = 0;           // size of the binding space
  std::size_t drawn = 0;
  std::vector<Counterexample> counterexamples;
};

struct NegativeResult {
  std::string name;
  std::string base;  // law whose proviso was stripped
  bool as_expected = false;
  LawReport report;
};

struct Report {
  GenConfig config;
  std::vector<LawReport> laws;
  std::vector<NegativeResult> negative;
  bool ran_negative = false;

  bool ok() const {
    for (const auto& l : laws) {
      if (l.status != "pass") return false;
    }
    for (const auto& n : negative) {
      if (!n.as_expected) return false;
    }
    return true;
  }
};

/// Everything the case generator draws from.
struct Pools {
  GenConfig g;
  Pool general;
  Pool interference;
  std::vector<Command> forall;  // values for quantified proviso variables, taken as a product
  std::vector<Command> sweep;   // values one quantified variable takes while the others are constants
  std::vector<StateRelation> relations;
  std::vector<StatePredicate> predicates;

  explicit Pools(const GenConfig& cfg)
      : g(cfg),
        general(gen_commands(cfg)),
        interference(gen_interference(cfg)),
        relations(alphabet_of(cfg)),
        predicates(predicate_alphabet(cfg.cfg.states)) {
    std::size_t m = std::min(cfg.forall_pool, general.size());
    std::size_t head = std::min(general.atoms, m);
    for (std::size_t i = 0; i < head; ++i) forall.push_back(general.items[i]);
    std::size_t rest = m - head, span = general.size() - head;
    for (std::size_t j = 0; j < rest; ++j) forall.push_back(general.items[head + (j * span) / rest]);
    std::size_t n = std::min(cfg.forall_sweep, general.size());
    for (std::size_t j = 0; j < n; ++j) sweep.push_back(general.items[(j * general.size()) / n]);
  }

  std::string render(const Command& c) const {
    if (auto t = general.find_text(c)) return *t;
    if (auto t = interference.find_text(c)) return *t;
    return "[" + rgalg::render(c, ", ") + "]";
  }
};

/// Per-law memo of parsed templates and quantified judgments.
struct LawCache {
  std::unordered_map<std::string, lang::Expr> exprs;
  std::unordered_map<std::string, Outcome> forall;
  bool deep = false;  // quantified provisos sweep every term of depth <= 1
};

namespace detail {

inline bool ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\''; }

inline std::vector<std::string> identifiers(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back(s.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

/// Replaces whole-identifier occurrences of `from` (use "_" for the hole).
inline std::string replace_ident(const std::string& s, const std::string& from, const std::string& to) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, from.size(), from) == 0 && (i == 0 || !ident_char(s[i - 1])) &&
        (i + from.size() >= s.size() || !ident_char(s[i + from.size()]))) {
      out += to;
      i += from.size();
    } else {
      out += s[i++];
    }
  }
  return out;
}

inline std::string value_key(const Value& v) {
  std::string k;
  auto bits = [&](const Command& c) {
    for (auto w : c.bits().words()) k.append(reinterpret_cast<const char*>(&w), sizeof w);
    k += '|';
  };
  if (auto c = std::get_if<Command>(&v)) bits(*c);
  else if (auto r = std::get_if<StateRelation>(&v)) k = "r" + r->key();
  else if (auto p = std::get_if<StatePredicate>(&v)) k = "p" + p->key();
  else if (auto f = std::get_if<ContextValue>(&v)) {
    k = "f" + std::to_string(f->tmpl) + ":";
    for (const auto& c : f->params) bits(c);
  } else {
    k = "s";
    for (const auto& c : std::get<std::vector<Command>>(v)) bits(c);
  }
  return k;
}

}  // namespace detail

/// Evaluation context for one case of one law.
class CaseEnv {
 public:
  CaseEnv(const LawSpec& law, const Case& c, const Pools& pools, LawCache& cache)
      : law_(law), case_(c), pools_(pools), cache_(cache), cfg_(pools.g.cfg) {
    shape_ = std::to_string(c.variant);
    for (std::size_t i = 0; i < law.metavars.size(); ++i) {
      const auto& m = law.metavars[i];
      const Value& v = c.values[i];
      switch (m.sort) {
        case VarSort::Command: binding_.set(m.name, std::get<Command>(v)); break;
        case VarSort::Relation: binding_.set(m.name, std::get<StateRelation>(v)); break;
        case VarSort::Predicate: binding_.set(m.name, std::get<StatePredicate>(v)); break;
        case VarSort::Context: {
          const auto& f = std::get<ContextValue>(v);
          std::string t = context_templates()[f.tmpl];
          static const char* params[] = {"k", "k2"};
          for (std::size_t p = 0; p < f.params.size(); ++p) {
            std::string pn = m.name + "_" + params[p];
            binding_.set(pn, f.params[p]);
            t = detail::replace_ident(t, params[p], pn);
          }
          contexts_[m.name] = t;
          shape_ += "," + std::to_string(f.tmpl);
          break;
        }
        case VarSort::CommandSet: break;
      }
    }
    if (!law.variants.empty()) {
      for (const auto& [n, def] : law.variants.at(c.variant)) contexts_[n] = def;
    }
  }

  const ModelConfig& cfg() const { return cfg_; }
  const Pools& pools() const { return pools_; }
  const LawSpec& law() const { return law_; }
  lang::Binding& binding() { return binding_; }

  const Value& value(const std::string& n) const { return case_.values[law_.var_index(n)]; }
  const Command& cmd(const std::string& n) const { return std::get<Command>(value(n)); }
  const StateRelation& rel(const std::string& n) const { return std::get<StateRelation>(value(n)); }
  const StatePredicate& pred(const std::string& n) const { return std::get<StatePredicate>(value(n)); }
  const std::vector<Command>& set(const std::string& n) const { return std::get<std::vector<Command>>(value(n)); }

  /// Template text with every `f[arg]` context application expanded.
  std::string expand(std::string s) const {
    for (;;) {
      auto close = s.find(']');
      if (close == std::string::npos) return s;
      auto open = s.rfind('[', close);
      if (open == std::string::npos) throw Error("unbalanced ']' in " + s);
      std::size_t b = open;
      while (b > 0 && detail::ident_char(s[b - 1])) --b;
      std::string name = s.substr(b, open - b);
      auto it = contexts_.find(name);
      if (it == contexts_.end()) throw Error("unknown context '" + name + "'");
      std::string arg = s.substr(open + 1, close - open - 1);
      std::string body = detail::replace_ident(it->second, "_", "(" + arg + ")");
      s = s.substr(0, b) + "(" + body + ")" + s.substr(close + 1);
    }
  }

  /// Denotation of a command template under this case.
  Command eval(const std::string& text) {
    bind_fixpoints(text);
    std::string key = shape_ + "\x1f" + text;
    auto it = cache_.exprs.find(key);
    if (it == cache_.exprs.end()) it = cache_.exprs.emplace(key, lang::parse(expand(text))).first;
    return lang::eval(it->second, binding_, cfg_);
  }

  /// Semantic comparison of two commands.
  static Outcome compare(Rel rel, const Command& a, const Command& b, const std::string& detail) {
    Outcome o;
    o.detail = detail;
    if (auto w = refinement_witness(a, b)) {
      o.verdict = Verdict::Fail;
      o.witness = to_string(*w);
      o.side = "lhs";
      return o;
    }
    if (rel == Rel::Eq) {
      if (auto w = refinement_witness(b, a)) {
        o.verdict = Verdict::Fail;
        o.witness = to_string(*w);
        o.side = "rhs";
      }
    }
    return o;
  }

  Outcome judge(const Judgment& j) {
    if (j.forall.empty()) return judge_plain(j);
    std::string key = memo_key(j);
    auto it = cache_.forall.find(key);
    if (it != cache_.forall.end()) return it->second;
    Outcome out = judge_forall(j);
    for (const auto& n : j.forall) binding_.values.erase(n);
    cache_.forall.emplace(key, out);
    return out;
  }

 private:
  /// Product over the leading proviso values, then a sweep of each variable with the others on constants.
  Outcome judge_forall(const Judgment& j) {
    const std::size_t k = j.forall.size();
    std::vector<const Command*> at(k);
    auto attempt = [&]() {
      for (std::size_t v = 0; v < k; ++v) binding_.set(j.forall[v], *at[v]);
      Outcome o = judge_plain(j);
      if (o.verdict == Verdict::Fail) {
        std::string where;
        for (std::size_t v = 0; v < k; ++v) where += (v ? ", " : "") + j.forall[v] + " = " + pools_.render(*at[v]);
        o.detail += " at " + where;
      }
      return o;
    };
    const auto& vals = pools_.forall;
    auto per_var = static_cast<std::size_t>(std::pow(static_cast<double>(pools_.g.forall_budget), 1.0 / static_cast<double>(k)));
    std::size_t m = std::min(vals.size(), std::max<std::size_t>(1, per_var));
    std::vector<std::size_t> digit(k, 0);
    for (;;) {
      for (std::size_t v = 0; v < k; ++v) at[v] = &vals[digit[v]];
      Outcome o = attempt();
      if (o.verdict == Verdict::Fail) return o;
      std::size_t v = 0;
      while (v < k && ++digit[v] == m) digit[v++] = 0;
      if (v == k) break;
    }
    if (k == 1 && !cache_.deep) return {};
    const auto& pool = pools_.general;
    std::vector<const Command*> sweep;
    if (cache_.deep) {
      for (std::size_t i = 0; i < pool.shallow; ++i) sweep.push_back(&pool.items[i]);
    } else {
      for (const auto& c : pools_.sweep) sweep.push_back(&c);
    }
    std::size_t anchors = k == 1 ? 1 : pool.constants;
    for (std::size_t v = 0; v < k; ++v) {
      std::vector<std::size_t> rest(k, 0);
      for (;;) {
        for (std::size_t w = 0; w < k; ++w) at[w] = &pool.items[rest[w]];
        for (const Command* x : sweep) {
          at[v] = x;
          Outcome o = attempt();
          if (o.verdict == Verdict::Fail) return o;
        }
        std::size_t w = 0;
        while (w < k && (w == v || ++rest[w] == anchors)) rest[w++] = 0;
        if (w == k) break;
      }
    }
    return {};
  }

  Outcome judge_plain(const Judgment& j) {
    if (j.rel == Rel::Subset) return judge_sets(j);
    return compare(j.rel, eval(j.lhs), eval(j.rhs), j.text());
  }

  lang::Sort set_sort(const std::string& text) const {
    for (const auto& id : detail::identifiers(text)) {
      if (const MetaVar* m = law_.var(id)) {
        if (m->sort == VarSort::Predicate) return lang::Sort::Predicate;
        if (m->sort == VarSort::Relation) return lang::Sort::Relation;
      }
    }
    return lang::Sort::Relation;
  }

  Outcome judge_sets(const Judgment& j) {
    Outcome o;
    o.detail = j.text();
    if (set_sort(j.lhs + " " + j.rhs) == lang::Sort::Predicate) {
      auto a = lang::eval_predicate(lang::parse_set(j.lhs, lang::Sort::Predicate), binding_, cfg_);
      auto b = lang::eval_predicate(lang::parse_set(j.rhs, lang::Sort::Predicate), binding_, cfg_);
      for (int s : a.members()) {
        if (!b.contains(s)) {
          o.verdict = Verdict::Fail;
          o.witness = std::to_string(s);
          o.side = "rhs";
          break;
        }
      }
      return o;
    }
    auto a = lang::eval_relation(lang::parse_set(j.lhs, lang::Sort::Relation), binding_, cfg_);
    auto b = lang::eval_relation(lang::parse_set(j.rhs, lang::Sort::Relation), binding_, cfg_);
    for (auto [x, y] : a.pairs()) {
      if (!b.contains(x, y)) {
        o.verdict = Verdict::Fail;
        o.witness = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
        o.side = "rhs";
        break;
      }
    }
    return o;
  }

  /// Binds mu_X / nu_X for every fixpoint name the template mentions.
  void bind_fixpoints(const std::string& text) {
    for (const auto& id : detail::identifiers(text)) {
      bool mu = id.rfind("mu_", 0) == 0, nu = id.rfind("nu_", 0) == 0;
      if ((!mu && !nu) || binding_.find(id)) continue;
      std::string ctx = id.substr(3);
      auto it = contexts_.find(ctx);
      if (it == contexts_.end()) throw Error("fixpoint of unknown context '" + ctx + "'");
      std::string key = shape_ + "\x1f" + ctx + "[_]";
      auto e = cache_.exprs.find(key);
      if (e == cache_.exprs.end()) e = cache_.exprs.emplace(key, lang::parse(expand(ctx + "[_]"))).first;
      auto f = lang::to_transformer(e->second, binding_, cfg_);
      binding_.set(id, mu ? lfp(f, cfg_) : gfp(f, cfg_));
    }
  }

  std::string memo_key(const Judgment& j) const {
    std::set<std::string> names;
    std::string text = j.lhs + " " + j.rhs;
    for (const auto& id : detail::identifiers(text)) {
      names.insert(id);
      std::string ctx = (id.rfind("mu_", 0) == 0 || id.rfind("nu_", 0) == 0) ? id.substr(3) : id;
      auto it = contexts_.find(ctx);
      if (it != contexts_.end()) {
        names.insert(ctx);
        for (const auto& d : detail::identifiers(it->second)) names.insert(d);
      }
    }
    std::string key = j.text() + "\x1e" + shape_;
    for (std::size_t i = 0; i < law_.metavars.size(); ++i) {
      if (names.count(law_.metavars[i].name)) key += "\x1e" + detail::value_key(case_.values[i]);
    }
    return key;
  }

  const LawSpec& law_;
  const Case& case_;
  const Pools& pools_;
  LawCache& cache_;
  ModelConfig cfg_;
  lang::Binding binding_;
  std::map<std::string, std::string> contexts_;
  std::string shape_;
};

namespace detail {

inline bool holds(CaseEnv& env, const std::vector<Judgment>& js, Outcome* failed = nullptr) {
  for (const auto& j : js) {
    Outcome o = env.judge(j);
    if (o.verdict == Verdict::Fail) {
      if (failed) *failed = o;
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Verdict of one case: Skip when a hypothesis fails, Fail with a witness when a conclusion fails.
inline Outcome evaluate_case(const LawSpec& law, const Case& c, const Pools& pools, LawCache& cache) {
  try {
    CaseEnv env(law, c, pools, cache);
    if (law.native) return law.native(env);
    if (law.kind == LawKind::IFF) {
      Outcome lf, rf;
      bool left = detail::holds(env, law.provisos, &lf);
      bool right = detail::holds(env, law.conclusions, &rf);
      if (left == right) return {};
      Outcome o = left ? rf : lf;
      o.detail = (left ? "left side holds but " : "right side holds but ") + o.detail + " fails";
      return o;
    }
    if (!detail::holds(env, law.provisos)) return {Verdict::Skip, "", "", ""};
    Outcome o;
    if (!detail::holds(env, law.conclusions, &o)) return o;
    return {};
  } catch (const std::exception& e) {
    return {Verdict::Fail, "", "", std::string("error: ") + e.what()};
  }
}

namespace detail {

/// Domain size of one metavariable under exhaustive enumeration (infinite for sets).
inline double domain_size(const MetaVar& m, const Pools& p) {
  switch (m.sort) {
    case VarSort::Command:
      return static_cast<double>(p.general.size() + (m.draw == Draw::Interference ? p.interference.size() : 0));
    case VarSort::Relation: return static_cast<double>(p.relations.size());
    case VarSort::Predicate: return static_cast<double>(p.predicates.size());
    case VarSort::Context: {
      double s = 0;
      for (const auto& t : context_templates()) s += std::pow(static_cast<double>(p.general.size()), context_params(t));
      return s;
    }
    case VarSort::CommandSet: return INFINITY;
  }
  return 0;
}

inline Value value_at(const MetaVar& m, const Pools& p, std::size_t idx) {
  switch (m.sort) {
    case VarSort::Command:
      return idx < p.general.size() ? p.general.items[idx] : p.interference.items[idx - p.general.size()];
    case VarSort::Relation: return p.relations[idx];
    case VarSort::Predicate: return p.predicates[idx];
    case VarSort::Context: {
      std::size_t n = p.general.size();
      for (std::size_t t = 0; t < context_templates().size(); ++t) {
        int k = context_params(context_templates()[t]);
        std::size_t span = k == 1 ? n : n * n;
        if (idx < span) {
          ContextValue f{t, {p.general.items[idx % n]}};
          if (k == 2) f.params.push_back(p.general.items[idx / n]);
          return f;
        }
        idx -= span;
      }
      throw Error("context index out of range");
    }
    case VarSort::CommandSet: break;
  }
  throw Error("command sets are not enumerable");
}

inline Value draw_value(const MetaVar& m, const Pools& p, std::mt19937_64& rng) {
  auto from = [&](const Pool& pool) { return pool.items[pick(rng, pool.size())]; };
  switch (m.sort) {
    case VarSort::Command:
      if (m.draw == Draw::Interference && pick(rng, 2) == 0) return from(p.interference);
      return from(p.general);
    case VarSort::Relation: return p.relations[pick(rng, p.relations.size())];
    case VarSort::Predicate: return p.predicates[pick(rng, p.predicates.size())];
    case VarSort::Context: {
      std::size_t t = pick(rng, context_templates().size());
      ContextValue f{t, {}};
      for (int k = 0; k < context_params(context_templates()[t]); ++k) f.params.push_back(from(p.general));
      return f;
    }
    case VarSort::CommandSet: {
      std::size_t n = m.draw == Draw::NonEmpty ? 1 + pick(rng, 4) : pick(rng, 5);
      std::vector<Command> s;
      for (std::size_t i = 0; i < n; ++i) s.push_back(from(p.general));
      return s;
    }
  }
  throw Error("bad metavariable sort");
}

inline bool is_var(const LawSpec& law, const std::string& text, VarSort sort) {
  const MetaVar* m = law.var(text);
  return m && m->sort == sort;
}

/// Moves a bare-variable side of each hypothesis towards satisfying it; false if nothing changed.
inline bool generic_repair(const LawSpec& law, Case& c, const Pools& pools, LawCache& cache) {
  bool changed = false;
  for (const auto& j : law.provisos) {
    if (!j.forall.empty()) continue;
    CaseEnv env(law, c, pools, cache);
    if (env.judge(j).verdict != Verdict::Fail) continue;
    if (j.rel == Rel::Subset) {
      bool pred = false;
      std::string target;
      if (is_var(law, j.lhs, VarSort::Relation) || (pred = is_var(law, j.lhs, VarSort::Predicate))) target = j.lhs;
      if (target.empty()) continue;
      auto& v = c.values[law.var_index(target)];
      if (pred) {
        v = env.pred(target).intersect(lang::eval_predicate(lang::parse_set(j.rhs, lang::Sort::Predicate),
                                                             env.binding(), env.cfg()));
      } else {
        v = env.rel(target).intersect(lang::eval_relation(lang::parse_set(j.rhs, lang::Sort::Relation),
                                                           env.binding(), env.cfg()));
      }
      changed = true;
      continue;
    }
    bool rhs_var = is_var(law, j.rhs, VarSort::Command);
    bool lhs_var = is_var(law, j.lhs, VarSort::Command);
    if (!rhs_var && !lhs_var) continue;
    const std::string& target = rhs_var ? j.rhs : j.lhs;
    Command other = env.eval(rhs_var ? j.lhs : j.rhs);
    Command cur = env.cmd(target);
    Command next = j.rel == Rel::Eq ? other : rhs_var ? supremum(cur, other) : nondet(cur, other);
    if (next != cur) {
      c.values[law.var_index(target)] = next;
      changed = true;
    }
  }
  return changed;
}

inline void repair_case(const LawSpec& law, Case& c, const Pools& pools, LawCache& cache) {
  for (int round = 0; round < 16; ++round) {
    bool changed = false;
    try {
      changed = law.repair ? [&] {
        CaseEnv env(law, c, pools, cache);
        return law.repair(env, c);
      }()
                           : generic_repair(law, c, pools, cache);
    } catch (const std::exception&) {
      return;
    }
    if (!changed) return;
  }
}

inline std::vector<std::pair<std::string, std::string>> render_bindings(const LawSpec& law, const Case& c,
                                                                        const Pools& p) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!law.variants.empty()) {
    std::string v;
    for (const auto& [n, def] : law.variants[c.variant]) v += (v.empty() ? "" : "; ") + n + " = " + def;
    out.emplace_back("variant", v);
  }
  for (std::size_t i = 0; i < law.metavars.size(); ++i) {
    const Value& v = c.values[i];
    std::string s;
    if (auto x = std::get_if<Command>(&v)) s = p.render(*x);
    else if (auto r = std::get_if<StateRelation>(&v)) s = r->str();
    else if (auto q = std::get_if<StatePredicate>(&v)) s = q->str();
    else if (auto f = std::get_if<ContextValue>(&v)) {
      s = context_templates()[f->tmpl];
      static const char* params[] = {"k", "k2"};
      for (std::size_t k = 0; k < f->params.size(); ++k) {
        s = replace_ident(s, params[k], "(" + p.render(f->params[k]) + ")");
      }
    } else {
      for (const auto& x : std::get<std::vector<Command>>(v)) s += (s.empty() ? "" : ", ") + p.render(x);
      s = "{" + s + "}";
    }
    out.emplace_back(law.metavars[i].name, s);
  }
  return out;
}

/// Greedy trace deletion on each bound command while the case keeps failing.
inline Case shrink(const LawSpec& law, Case c, const Pools& pools, LawCache& cache) {
  const std::size_t budget = 4000;
  std::size_t trials = 0;
  for (std::size_t i = 0; i < law.metavars.size(); ++i) {
    if (law.metavars[i].sort != VarSort::Command) continue;
    bool progress = true;
    while (progress && trials < budget) {
      progress = false;
      const Command cur = std::get<Command>(c.values[i]);
      const Universe& U = cur.universe();
      std::vector<std::size_t> members;
      cur.bits().for_each([&](std::size_t t) { members.push_back(t); });
      for (auto t = members.rbegin(); t != members.rend() && trials < budget; ++t) {
        if (U.parent(static_cast<Universe::Index>(*t)) == Universe::npos) continue;
        Bits b = cur.bits();
        b.reset(*t);
        Bits inner = U.closed_interior(b);
        Case trial = c;
        trial.values[i] = Command::from_closed(cur.universe_ptr(), inner);
        ++trials;
        if (evaluate_case(law, trial, pools, cache).verdict == Verdict::Fail) {
          c = std::move(trial);
          progress = true;
          break;
        }
      }
    }
  }
  return c;
}

inline bool has_native_or_provisos(const LawSpec& law) {
  return law.kind != LawKind::IFF && (!law.provisos.empty() || law.native);
}

inline std::uint64_t law_seed(const GenConfig& g, const std::string& name) { return g.seed ^ fnv1a(name); }

}  // namespace detail

inline LawReport check_law(const LawSpec& law, const Pools& pools) {
  const GenConfig& g = pools.g;
  LawReport rep;
  rep.name = law.name;
  rep.provenance = law.provenance;
  rep.kind = kind_name(law.kind);
  rep.note = law.note;
  rep.model_gap = law.model_gap;
  LawCache cache;
  std::mt19937_64 rng(detail::law_seed(g, law.name));

  const std::size_t nv = law.metavars.size();
  const std::size_t variants = std::max<std::size_t>(1, law.variants.size());
  std::vector<double> dom(nv);
  double space = static_cast<double>(variants);
  for (std::size_t i = 0; i < nv; ++i) space *= dom[i] = detail::domain_size(law.metavars[i], pools);
  rep.space = std::isfinite(space) ? space : -1;

  // failures must survive the deep proviso search before they are reported
  LawCache deep;
  deep.deep = true;
  bool quantified = std::any_of(law.provisos.begin(), law.provisos.end(), [](const Judgment& j) { return !j.forall.empty(); });
  std::vector<Case> failures;
  auto record = [&](const Case& c) {
    Outcome o = evaluate_case(law, c, pools, cache);
    if (o.verdict == Verdict::Fail && quantified) o = evaluate_case(law, c, pools, deep);
    if (o.verdict == Verdict::Skip) {
      ++rep.cases_proviso_skipped;
      return;
    }
    ++rep.cases_checked;
    if (o.verdict == Verdict::Fail) failures.push_back(c);
  };
  const std::size_t max_fail = std::max<std::size_t>(1, g.max_counterexamples);

  bool exhaustive = std::isfinite(space) &&
                    (space <= static_cast<double>(g.samples) ||
                     (g.mode == GenMode::ExhaustivePool && space <= static_cast<double>(g.exhaustive_budget)));
  if (exhaustive) {
    rep.coverage_mode = "exhaustive";
    std::size_t total = static_cast<std::size_t>(space);
    for (std::size_t k = 0; k < total && failures.size() < max_fail; ++k) {
      Case c;
      std::size_t r = k;
      c.variant = r % variants;
      r /= variants;
      for (std::size_t i = 0; i < nv; ++i) {
        std::size_t d = static_cast<std::size_t>(dom[i]);
        c.values.push_back(detail::value_at(law.metavars[i], pools, r % d));
        r /= d;
      }
      ++rep.drawn;
      record(c);
    }
  } else {
    // Relation, predicate and variant coordinates cycle through their full product when it fits the budget.
    std::vector<std::size_t> strat;
    double strat_space = static_cast<double>(variants);
    for (std::size_t i = 0; i < nv; ++i) {
      auto s = law.metavars[i].sort;
      if (s == VarSort::Relation || s == VarSort::Predicate) {
        strat.push_back(i);
        strat_space *= dom[i];
      }
    }
    bool stratified = strat_space > 1 && strat_space <= static_cast<double>(g.samples);
    rep.coverage_mode = stratified ? "stratified" : "sampled";
    bool conditional = detail::has_native_or_provisos(law) || law.repair;
    bool repairable = conditional && (law.repair || !law.provisos.empty());
    std::size_t max_draws = conditional ? 10 * g.samples : g.samples;
    for (std::size_t k = 0; k < max_draws && failures.size() < max_fail; ++k) {
      if (conditional && rep.cases_checked >= g.samples) break;
      Case c;
      c.values.reserve(nv);
      for (std::size_t i = 0; i < nv; ++i) c.values.push_back(detail::draw_value(law.metavars[i], pools, rng));
      c.variant = detail::pick(rng, variants);
      if (stratified) {
        std::size_t r = k % static_cast<std::size_t>(strat_space);
        c.variant = r % variants;
        r /= variants;
        for (std::size_t i : strat) {
          std::size_t d = static_cast<std::size_t>(dom[i]);
          c.values[i] = detail::value_at(law.metavars[i], pools, r % d);
          r /= d;
        }
      }
      if (repairable && k % 2 == 1) detail::repair_case(law, c, pools, cache);
      ++rep.drawn;
      record(c);
    }
  }

  for (const auto& f : failures) {
    Case small = detail::shrink(law, f, pools, cache);
    Outcome o = evaluate_case(law, small, pools, quantified ? deep : cache);
    if (o.verdict != Verdict::Fail) {
      small = f;
      o = evaluate_case(law, small, pools, quantified ? deep : cache);
    }
    rep.counterexamples.push_back({detail::render_bindings(law, small, pools), o.witness, o.side, o.detail});
  }
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) { return a.key() < b.key(); });
  rep.counterexamples.erase(std::unique(rep.counterexamples.begin(), rep.counterexamples.end(),
                                        [](const Counterexample& a, const Counterexample& b) { return a.key() == b.key(); }),
                            rep.counterexamples.end());
  rep.status = !rep.counterexamples.empty() ? "fail" : rep.cases_checked == 0 ? "skipped-all" : "pass";
  return rep;
}

inline LawReport check_law(const LawSpec& law, const GenConfig& g) { return check_law(law, Pools(g)); }

/// Comma-separated globs; empty matches everything.
inline bool name_matches(const std::string& name, const std::string& filter) {
  if (filter.empty()) return true;
  std::size_t s = 0;
  for (;;) {
    auto comma = filter.find(',', s);
    std::string pat = detail::trim(filter.substr(s, comma - s));
    if (!pat.empty() && fnmatch(pat.c_str(), name.c_str(), 0) == 0) return true;
    if (comma == std::string::npos) return false;
    s = comma + 1;
  }
}

inline std::vector<LawReport> check_laws(const std::vector<LawSpec>& laws, const Pools& pools,
                                         const std::string& filter = "") {
  std::vector<LawReport> out;
  for (const auto& l : laws) {
    if (name_matches(l.name, filter)) out.push_back(check_law(l, pools));
  }
  return out;
}

}  // namespace rgalg::harness
