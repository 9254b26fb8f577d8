// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every FAIL line is fully explained by the laws the
// catalogue marks as model gaps and every model gap still fails somewhere.
// Any other failure, or a gap law that has started to pass, exits 1.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "rgalg/harness/report.hpp"

using namespace rgalg;
using namespace rgalg::harness;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Named axioms of the lattice and core-language figures.
const std::set<std::string> kAxioms = {
    "infimum-associative", "infimum-commutes", "infimum-idempotent", "supremum-associative", "supremum-commutes",
    "supremum-idempotent", "infimum-absorb-supremum", "supremum-absorb-infimum", "infimum-lower-bound",
    "infimum-greatest-lower-bound", "supremum-upper-bound", "supremum-least-upper-bound",
    "infimum-distribute-supremum", "least-fixed-point-unfold", "least-fixed-point-induction",
    "greatest-fixed-point-unfold", "greatest-fixed-point-induction", "sequential-associative",
    "sequential-identity-right", "sequential-identity-left", "sequential-distribute-nondet-left",
    "sequential-distribute-nondet-right", "sequential-abort-zero-left", "parallel-associative", "parallel-commutes",
    "parallel-identity", "parallel-distribute", "skip-skip", "skip-nil", "conjunction-associative",
    "conjunction-commutes", "conjunction-idempotent", "conjunction-identity", "chaos-skip", "chaos-parallel-chaos",
    "conjunction-distribute-infimum", "conjunction-distribute-supremum", "conjunction-exchange-parallel",
    "conjunction-exchange-sequential"};

const std::set<std::string> kRelationalGroups = {"Relational semantics", "Relational weak conjunction",
                                                 "Relational provisos"};

std::string group_of(const LawSpec& l) { return l.provenance.substr(0, l.provenance.find(':')); }

bool quantified(const LawSpec& l) {
  for (const auto& j : l.provisos) {
    if (!j.forall.empty()) return true;
  }
  return false;
}

struct Tally {
  std::set<std::string> gaps;          // documented model gaps
  std::set<std::string> gaps_failing;  // gaps seen failing in some run
  bool unexpected = false;
  std::size_t lines = 0, passed = 0;

  void line(const std::string& id, bool ok, const std::string& text, bool explained = false) {
    ++lines;
    passed += ok ? 1 : 0;
    if (!ok && !explained) unexpected = true;
    std::cout << (ok ? "PASS " : "FAIL ") << id << "  " << text << std::endl;
  }
};

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
  return s;
}

std::vector<LawReport> run_laws(const std::vector<LawSpec>& laws, const Pools& pools) {
  std::vector<LawReport> out;
  for (const auto& l : laws) out.push_back(check_law(l, pools));
  return out;
}

/// Reports a law regime as one line; failures are explained when all are model gaps.
void law_line(Tally& t, const std::string& id, const std::string& what, const std::vector<LawReport>& reps,
              std::size_t min_cases, double secs) {
  std::vector<std::string> failing, thin;
  bool all_gaps = true;
  for (const auto& r : reps) {
    if (r.status != "pass") {
      failing.push_back(r.name);
      all_gaps = all_gaps && r.model_gap;
      if (r.model_gap) t.gaps_failing.insert(r.name);
    } else if (r.coverage_mode != "exhaustive" && r.cases_checked + r.cases_proviso_skipped < min_cases) {
      thin.push_back(r.name);
    }
  }
  std::ostringstream os;
  os << what << ": " << reps.size() - failing.size() << "/" << reps.size() << " pass";
  if (min_cases) os << ", every sampled law >= " << min_cases << " cases";
  os << " (" << static_cast<int>(secs) << "s)";
  if (!failing.empty()) os << "; fail: " << join(failing) << (all_gaps ? " (all documented model gaps)" : "");
  if (!thin.empty()) {
    os << "; under-sampled: " << join(thin);
    all_gaps = false;
  }
  t.line(id, failing.empty() && thin.empty(), os.str(), all_gaps);
}

GenConfig small_regime() {
  GenConfig g;
  g.cfg = {1, 2};
  g.term_depth = 2;
  g.samples = 5000;
  g.mode = GenMode::ExhaustivePool;
  return g;
}

GenConfig random_regime() {
  GenConfig g;
  g.cfg = {2, 3};
  g.term_depth = 2;
  g.samples = 5000;
  g.mode = GenMode::Random;
  return g;
}

void criterion_laws(Tally& t) {
  std::vector<LawSpec> axioms, derived, relational;
  for (auto& l : law_catalogue()) {
    if (l.model_gap) t.gaps.insert(l.name);
    if (kAxioms.count(l.name)) axioms.push_back(l);
    else if (kRelationalGroups.count(group_of(l))) relational.push_back(l);
    else derived.push_back(l);
  }
  t.line("1.0", axioms.size() == kAxioms.size(),
         "axiom list resolves: " + std::to_string(axioms.size()) + "/" + std::to_string(kAxioms.size()) + " in catalogue");

  Pools small(small_regime());
  auto start = Clock::now();
  auto ax_small = run_laws(axioms, small);
  double s1 = seconds_since(start);
  Pools big(random_regime());
  start = Clock::now();
  auto ax_big = run_laws(axioms, big);
  double s2 = seconds_since(start);
  law_line(t, "1a", "axioms, N=1 L=2 depth-2 pool", ax_small, 0, s1);
  law_line(t, "1b", "axioms, N=2 L=3 seeded random", ax_big, 5000, s2);
  t.line("1c", s1 + s2 <= 600, "axiom runtime " + std::to_string(static_cast<int>(s1 + s2)) + "s <= 600s");

  start = Clock::now();
  auto de_small = run_laws(derived, small);
  s1 = seconds_since(start);
  start = Clock::now();
  auto de_big = run_laws(derived, big);
  s2 = seconds_since(start);
  law_line(t, "2a", "derived laws, N=1 L=2 depth-2 pool", de_small, 0, s1);
  law_line(t, "2b", "derived laws, N=2 L=3 seeded random", de_big, 5000, s2);

  std::vector<std::string> thin;
  std::size_t conditional = 0, lowest = SIZE_MAX;
  for (std::size_t k = 0; k < derived.size(); ++k) {
    if (!derived[k].conditional() && !quantified(derived[k])) continue;
    // failing laws stop at their first counterexamples and are reported under 2a/2b
    if (de_big[k].status != "pass") continue;
    ++conditional;
    lowest = std::min(lowest, de_big[k].cases_checked);
    if (de_big[k].cases_checked < 100) thin.push_back(derived[k].name);
  }
  t.line("2c", thin.empty(),
         std::to_string(conditional) + " passing proviso-bearing laws, each >= 100 proviso-satisfying cases (min " +
             std::to_string(lowest) + ")" + (thin.empty() ? "" : "; short: " + join(thin)));

  start = Clock::now();
  auto rel = run_laws(relational, big);
  s1 = seconds_since(start);
  std::vector<std::string> partial;
  for (const auto& r : rel) {
    if (r.coverage_mode != "exhaustive" && r.coverage_mode != "stratified") partial.push_back(r.name);
  }
  law_line(t, "3a", "relational laws, N=2 L=3", rel, 0, s1);
  t.line("3b", partial.empty(),
         "relation and predicate coordinates enumerated exhaustively for all " + std::to_string(rel.size()) +
             " relational laws" + (partial.empty() ? "" : "; sampled: " + join(partial)));
}

void criterion_galois(Tally& t) {
  // 4a: sampled triples at N=2 L=3, with d drawn near the quotient so both sides of the equivalence occur
  GenConfig g = random_regime();
  Pools pools(g);
  const auto& pool = pools.general;
  std::mt19937_64 rng(4);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  std::size_t bad = 0, both = 0;
  const std::size_t triples = 10000;
  for (std::size_t k = 0; k < triples; ++k) {
    const Command& c = pool.items[pick(pool.size())];
    const Command& i = k % 2 ? pool.items[pick(pool.size())] : pools.interference.items[pick(pools.interference.size())];
    Command d = pool.items[pick(pool.size())];
    Command q = quotient(c, i);
    if (k % 3 == 1) d = supremum(q, d);
    if (k % 3 == 2) d = q;
    bool lhs = refines(q, d), rhs = refines(c, par(d, i));
    both += lhs && rhs ? 1 : 0;
    bad += lhs != rhs ? 1 : 0;
  }
  t.line("4a", bad == 0,
         "Galois on " + std::to_string(triples) + " sampled triples at N=2 L=3: " + std::to_string(bad) +
             " violations (" + std::to_string(both) + " with both sides true)");

  // 4b: every triple at N=1 L=1
  ModelConfig tiny{1, 1};
  auto all = oracle::all_commands(tiny);
  std::size_t count = 0;
  bad = 0;
  for (const auto& i : all) {
    std::vector<Command> images;
    for (const auto& d : all) images.push_back(par(d, i));
    for (const auto& c : all) {
      Command q = quotient(c, i);
      for (std::size_t k = 0; k < all.size(); ++k, ++count) {
        bad += refines(q, all[k]) != refines(c, images[k]) ? 1 : 0;
      }
    }
  }
  t.line("4b", bad == 0,
         "Galois on all " + std::to_string(count) + " triples at N=1 L=1: " + std::to_string(bad) + " violations");

  // 4c: quotient equals the union of every closed d with d || i [= c, over full universes
  std::size_t pairs = 0;
  bad = 0;
  for (int len = 0; len <= 2; ++len) {
    ModelConfig cfg{1, len};
    auto cmds = oracle::all_commands(cfg);
    auto u = Universe::get(cfg);
    auto universe = enumerate_universe(cfg);
    for (const auto& i : cmds) {
      std::vector<Bits> images;
      for (const auto& d : cmds) images.push_back(par(d, i).bits());
      for (const auto& c : cmds) {
        Bits acc = u->roots();
        for (std::size_t k = 0; k < cmds.size(); ++k) {
          if (images[k].subset_of(c.bits())) acc |= cmds[k].bits();
        }
        Command q = quotient(c, i);
        bool same = q.bits() == acc;
        if (len <= 1) same = same && q == quotient_oracle(c, i, universe);
        bad += same ? 0 : 1;
        ++pairs;
      }
    }
  }
  t.line("4c", bad == 0,
         "quotient equals the closed-subset oracle on all " + std::to_string(pairs) + " (c, i) pairs at N=1 L<=2: " +
             std::to_string(bad) + " mismatches");
}

void criterion_negative(Tally& t) {
  auto start = Clock::now();
  Pools pools{GenConfig{}};
  auto negs = negative_suite(pools);
  std::vector<std::string> ok, missed;
  for (const auto& n : negs) (n.as_expected ? ok : missed).push_back(n.name);
  std::ostringstream os;
  os << ok.size() << "/" << negs.size() << " stripped-proviso variants fail at the default budget ("
     << static_cast<int>(seconds_since(start)) << "s): " << join(ok);
  if (!missed.empty()) os << "; still passing: " << join(missed);
  t.line("5", missed.empty() && negs.size() >= 6, os.str());
}

void criterion_parser(Tally& t) {
  std::mt19937_64 rng(2024);
  lang::RandomExprOptions o;
  o.command_vars = {"c", "d", "x1"};
  o.relation_vars = {"r", "g"};
  o.predicate_vars = {"p"};
  std::size_t bad = 0;
  const std::size_t n = 10000;
  for (std::size_t k = 0; k < n; ++k) {
    lang::Expr e = lang::random_expr(rng, 1 + static_cast<int>(k % 5), o);
    try {
      bad += lang::parse(lang::print(e)) == e ? 0 : 1;
    } catch (const Error&) {
      ++bad;
    }
  }
  t.line("6a", bad == 0, "parse(print(e)) = e on " + std::to_string(n) + " generated ASTs: " + std::to_string(bad) + " mismatches");

  using lang::Expr;
  using lang::Op;
  bool seq_par = lang::parse("a ; b || c") ==
                 Expr::binary(Op::Par, Expr::binary(Op::Seq, Expr::var("a"), Expr::var("b")), Expr::var("c"));
  bool skip = lang::parse("skip") == Expr::leaf(Op::Skip);
  bool error_at = false;
  try {
    lang::parse("pi(");
  } catch (const lang::ParseError& e) {
    error_at = e.offset == 3;
  }
  t.line("6b", seq_par && skip && error_at,
         std::string("precedence examples: 'a ; b || c' ") + (seq_par ? "ok" : "wrong") + ", 'skip' " +
             (skip ? "ok" : "wrong") + ", 'pi(' error at offset 3 " + (error_at ? "ok" : "wrong"));
}

void criterion_determinism(Tally& t) {
  GenConfig g = small_regime();
  g.seed = 42;
  auto a = run_suite(g, "", true);
  auto b = run_suite(g, "", true);
  bool json = report_json(a).dump() == report_json(b).dump();
  bool text = report_text(a) == report_text(b);
  t.line("7", json && text,
         std::string("two identical check runs (N=1 L=2, seed 42, with negatives): JSON ") +
             (json ? "identical" : "differs") + ", text " + (text ? "identical" : "differs"));
}

void criterion_closure(Tally& t) {
  ModelConfig cfg{2, 3};
  std::mt19937_64 rng(8);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto rels = StateRelation::all(2);
  auto preds = StatePredicate::all(2);
  std::vector<Command> live;
  for (int k = 0; k < 16; ++k) live.push_back(oracle::random_command(cfg, rng));
  std::size_t bad = 0;
  const std::size_t n = 10000;
  for (std::size_t k = 0; k < n; ++k) {
    const Command& x = live[pick(live.size())];
    const Command& y = live[pick(live.size())];
    const StateRelation& r = rels[pick(rels.size())];
    Command out = x;
    switch (pick(18)) {
      case 0: out = nondet(x, y); break;
      case 1: out = supremum(x, y); break;
      case 2: out = seq(x, y); break;
      case 3: out = par(x, y); break;
      case 4: out = conj(x, y); break;
      case 5: out = quotient(x, y); break;
      case 6: out = star(x); break;
      case 7: out = omega(x); break;
      case 8: out = star_skip(x); break;
      case 9: out = omega_skip(x); break;
      case 10: out = pstep(r, cfg); break;
      case 11: out = estep(r, cfg); break;
      case 12: out = atomic(r, cfg); break;
      case 13: out = envc(r, cfg); break;
      case 14: out = fin_guar(r, cfg); break;
      case 15: out = spec_cmd(r, cfg); break;
      case 16: out = guard(preds[pick(preds.size())], cfg); break;
      default: out = precond(preds[pick(preds.size())], cfg); break;
    }
    TraceSet ts = out.traces();
    bad += close(ts, cfg) == ts ? 0 : 1;
    // keep composing on recent outputs so applications nest
    live[pick(live.size())] = out.size() > 1 ? out : oracle::random_command(cfg, rng);
  }
  t.line("8", bad == 0,
         "close(x) = x on " + std::to_string(n) + " random operator applications: " + std::to_string(bad) + " violations");
}

}  // namespace

int main() {
  auto start = Clock::now();
  Tally t;
  criterion_laws(t);
  criterion_galois(t);
  criterion_negative(t);
  criterion_parser(t);
  criterion_determinism(t);
  criterion_closure(t);

  std::vector<std::string> silent;
  for (const auto& g : t.gaps) {
    if (!t.gaps_failing.count(g)) silent.push_back(g);
  }
  bool ok = !t.unexpected && silent.empty();
  std::cout << "summary: " << t.passed << "/" << t.lines << " criteria lines pass; " << t.gaps_failing.size() << "/"
            << t.gaps.size() << " documented model gaps observed failing";
  if (!silent.empty()) std::cout << "; gaps not failing: " << join(silent);
  std::cout << "; " << (ok ? "no unexplained failures" : "UNEXPLAINED FAILURES") << " ("
            << static_cast<int>(seconds_since(start)) << "s)" << std::endl;
  return ok ? 0 : 1;
}
