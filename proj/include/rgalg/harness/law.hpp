#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rgalg/lang/eval.hpp"

namespace rgalg::harness {

enum class LawKind { EQ, REFINES, IFF, IMPLIES };

inline const char* kind_name(LawKind k) {
  switch (k) {
    case LawKind::EQ: return "EQ";
    case LawKind::REFINES: return "REFINES";
    case LawKind::IFF: return "IFF";
    case LawKind::IMPLIES: return "IMPLIES";
  }
  return "?";
}

/// Relation between the two sides of a judgment. Subset compares relations or predicates.
enum class Rel { Eq, Refines, Subset };

enum class VarSort { Command, Relation, Predicate, Context, CommandSet };

/// Where sampled values come from.
enum class Draw { General, Interference, NonEmpty };

struct MetaVar {
  std::string name;
  VarSort sort = VarSort::Command;
  Draw draw = Draw::General;
};

/// `lhs rel rhs`, optionally universally quantified over the proviso pool.
struct Judgment {
  Rel rel = Rel::Eq;
  std::string lhs, rhs;
  std::vector<std::string> forall;

  std::string text() const {
    std::string s;
    if (!forall.empty()) {
      s = "forall";
      for (const auto& v : forall) s += " " + v;
      s += " . ";
    }
    const char* op = rel == Rel::Eq ? " = " : rel == Rel::Refines ? " [= " : " <= ";
    return s + lhs + op + rhs;
  }
};

/// A context value: template index into the context pool plus its command parameters.
struct ContextValue {
  std::size_t tmpl = 0;
  std::vector<Command> params;
};

using Value = std::variant<Command, StateRelation, StatePredicate, ContextValue, std::vector<Command>>;

/// One instantiation of a law's metavariables.
struct Case {
  std::size_t variant = 0;
  std::vector<Value> values;  // parallel to LawSpec::metavars
};

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string witness;  // trace text, or a pair/state for set judgments
  std::string side;     // which side lacked the witness
  std::string detail;   // failing judgment or diagnostic
};

class CaseEnv;

using NativeCheck = std::function<Outcome(CaseEnv&)>;
/// Adjusts a case towards satisfying its hypotheses; returns false if nothing changed.
using NativeRepair = std::function<bool(CaseEnv&, Case&)>;

struct LawSpec {
  std::string name;
  LawKind kind = LawKind::EQ;
  std::vector<MetaVar> metavars;
  /// IMPLIES/EQ/REFINES: hypotheses (false => case skipped). IFF: provisos[0] is the left side.
  std::vector<Judgment> provisos;
  std::vector<Judgment> conclusions;
  /// Alternative definitions of fixed contexts, e.g. {"F", "c^o && _"}.
  std::vector<std::map<std::string, std::string>> variants;
  std::string provenance;
  std::string statement;
  std::string note;
  bool model_gap = false;  // fails in the trace model itself; see note
  NativeCheck native;
  NativeRepair repair;

  const MetaVar* var(const std::string& n) const {
    for (const auto& m : metavars) {
      if (m.name == n) return &m;
    }
    return nullptr;
  }
  std::size_t var_index(const std::string& n) const {
    for (std::size_t i = 0; i < metavars.size(); ++i) {
      if (metavars[i].name == n) return i;
    }
    throw Error("law " + name + ": unknown metavariable " + n);
  }
  bool conditional() const { return kind != LawKind::IFF && (!provisos.empty() || repair); }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ' || ch == '\t' || ch == '\n') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace detail

/// Parses "c d r:rel p:pred f:ctx C:set i:int D:set+".
inline std::vector<MetaVar> parse_vars(const std::string& spec) {
  std::vector<MetaVar> out;
  for (const auto& tok : detail::split_ws(spec)) {
    MetaVar m;
    auto colon = tok.find(':');
    m.name = tok.substr(0, colon);
    if (colon != std::string::npos) {
      std::string s = tok.substr(colon + 1);
      if (s == "rel") m.sort = VarSort::Relation;
      else if (s == "pred") m.sort = VarSort::Predicate;
      else if (s == "ctx") m.sort = VarSort::Context;
      else if (s == "set") m.sort = VarSort::CommandSet;
      else if (s == "set+") m.sort = VarSort::CommandSet, m.draw = Draw::NonEmpty;
      else if (s == "int") m.draw = Draw::Interference;
      else throw Error("bad metavariable sort '" + s + "'");
    }
    out.push_back(m);
  }
  return out;
}

/// Parses "a = b = c", "a [= b", "r0 <= r1", "forall x y . a [= b" into a chain of judgments.
inline std::vector<Judgment> parse_judgments(const std::string& text) {
  std::string body = text;
  std::vector<std::string> forall;
  if (body.rfind("forall ", 0) == 0) {
    auto dot = body.find(" . ");
    if (dot == std::string::npos) throw Error("forall without ' . ' in: " + text);
    auto vars = detail::split_ws(body.substr(7, dot - 7));
    forall = vars;
    body = body.substr(dot + 3);
  }
  static const std::pair<const char*, Rel> ops[] = {{" [= ", Rel::Refines}, {" <= ", Rel::Subset}, {" = ", Rel::Eq}};
  std::vector<std::string> sides;
  std::vector<Rel> rels;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    for (auto [op, r] : ops) {
      std::size_t n = std::char_traits<char>::length(op);
      if (body.compare(i, n, op) == 0) {
        sides.push_back(detail::trim(body.substr(start, i - start)));
        rels.push_back(r);
        i += n - 1;
        start = i + 1;
        break;
      }
    }
  }
  sides.push_back(detail::trim(body.substr(start)));
  if (rels.empty()) throw Error("judgment without relation: " + text);
  std::vector<Judgment> out;
  for (std::size_t k = 0; k < rels.size(); ++k) out.push_back(Judgment{rels[k], sides[k], sides[k + 1], forall});
  return out;
}

/// Fluent construction of catalogue entries.
class LawBuilder {
 public:
  /// `native` statements are descriptive only; the check is supplied via native().
  LawBuilder(std::string name, LawKind kind, const std::string& vars, const std::string& statement,
             const std::string& group, bool native = false) {
    law_.name = std::move(name);
    law_.kind = kind;
    law_.metavars = parse_vars(vars);
    law_.statement = statement;
    law_.provenance = group + ": " + statement;
    if (native) return;
    if (kind == LawKind::IFF) {
      auto pos = statement.find(" <=> ");
      if (pos == std::string::npos) throw Error("IFF law without <=>: " + statement);
      law_.provisos = parse_judgments(statement.substr(0, pos));
      law_.conclusions = parse_judgments(statement.substr(pos + 5));
    } else if (kind == LawKind::IMPLIES) {
      auto pos = statement.find(" => ");
      if (pos == std::string::npos) throw Error("IMPLIES law without =>: " + statement);
      std::string hyp = statement.substr(0, pos);
      std::size_t s = 0;
      for (;;) {
        auto amp = hyp.find(" and ", s);
        for (auto& j : parse_judgments(detail::trim(hyp.substr(s, amp - s)))) law_.provisos.push_back(j);
        if (amp == std::string::npos) break;
        s = amp + 5;
      }
      law_.conclusions = parse_judgments(statement.substr(pos + 4));
    } else if (!statement.empty()) {
      law_.conclusions = parse_judgments(statement);
    }
  }

  LawBuilder& proviso(const std::string& j) {
    for (auto& x : parse_judgments(j)) law_.provisos.push_back(x);
    law_.provenance += ", if " + j;
    return *this;
  }
  LawBuilder& conclusion(const std::string& j) {
    for (auto& x : parse_judgments(j)) law_.conclusions.push_back(x);
    law_.statement += "; " + j;
    law_.provenance += "; " + j;
    return *this;
  }
  LawBuilder& variant(std::map<std::string, std::string> defs) {
    law_.variants.push_back(std::move(defs));
    return *this;
  }
  LawBuilder& note(const std::string& n) {
    law_.note = n;
    return *this;
  }
  LawBuilder& model_gap(const std::string& why) {
    law_.note = why;
    law_.model_gap = true;
    return *this;
  }
  LawBuilder& native(NativeCheck f) {
    law_.native = std::move(f);
    return *this;
  }
  LawBuilder& repair(NativeRepair f) {
    law_.repair = std::move(f);
    return *this;
  }
  LawSpec build() const { return law_; }
  operator LawSpec() const { return law_; }

 private:
  LawSpec law_;
};

}  // namespace rgalg::harness
