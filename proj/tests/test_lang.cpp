#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rgalg/lang/eval.hpp"
#include "rgalg/lang/random_expr.hpp"

using namespace rgalg;
using namespace rgalg::lang;

namespace {
Expr v(const char* n) { return Expr::var(n); }
Expr bin(Op o, Expr a, Expr b) { return Expr::binary(o, std::move(a), std::move(b)); }
}  // namespace

TEST(Parse, Precedence) {
  EXPECT_EQ(parse("a ; b || c"), bin(Op::Par, bin(Op::Seq, v("a"), v("b")), v("c")));
  EXPECT_EQ(parse("skip"), Expr::leaf(Op::Skip));
  EXPECT_EQ(parse("a |-| b |+| c"), bin(Op::Sup, bin(Op::Nondet, v("a"), v("b")), v("c")));
  EXPECT_EQ(parse("a || b && c // d ; e"),
            bin(Op::Par, v("a"), bin(Op::Conj, v("b"), bin(Op::Quot, v("c"), bin(Op::Seq, v("d"), v("e"))))));
  EXPECT_EQ(parse("a ; b ; c"), bin(Op::Seq, bin(Op::Seq, v("a"), v("b")), v("c")));
  EXPECT_EQ(parse("a // b // c"), bin(Op::Quot, bin(Op::Quot, v("a"), v("b")), v("c")));
  EXPECT_EQ(parse("a ; b^*"), bin(Op::Seq, v("a"), Expr::postfix(Op::Star, v("b"))));
  EXPECT_EQ(parse("(a ; b)^o!"), Expr::postfix(Op::OmegaSkip, bin(Op::Seq, v("a"), v("b"))));
  EXPECT_EQ(parse("a^*!^o"), Expr::postfix(Op::Omega, Expr::postfix(Op::StarSkip, v("a"))));
}

TEST(Parse, UnicodeAndComments) {
  EXPECT_EQ(parse("a ⊓ b ⊔ c ∥ d ⋓ e"), parse("a |-| b |+| c || d && e"));
  EXPECT_EQ(parse("a # trailing comment\n ; b"), parse("a ; b"));
  EXPECT_EQ(parse("pi(r ∩ ¬id ∪ {(0,1)})"), parse("pi(r & ~id + {(0,1)})"));
}

TEST(Parse, Literals) {
  auto e = parse("pi({(0,1),(1,0)})");
  ASSERT_EQ(e.op, Op::PStep);
  EXPECT_EQ(e.arg->pairs, (std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}));
  auto g = parse("guard({0,1})");
  EXPECT_EQ(g.arg->members, (std::vector<int>{0, 1}));
  EXPECT_EQ(parse("guard(all)").arg->kind, SetExpr::Kind::All);
  EXPECT_EQ(parse("atomic(none)").arg->kind, SetExpr::Kind::None);
  EXPECT_EQ(parse("_").op, Op::Hole);
}

TEST(Parse, Errors) {
  try {
    parse("pi(");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset, 3u);
    EXPECT_FALSE(e.expected.empty());
  }
  EXPECT_THROW(parse("a ;"), ParseError);
  EXPECT_THROW(parse("(a"), ParseError);
  EXPECT_THROW(parse("a b"), ParseError);
  EXPECT_THROW(parse("guard(id)"), ParseError);
  EXPECT_THROW(parse("pi(all)"), ParseError);
  EXPECT_THROW(parse("pi({0})"), ParseError);
  EXPECT_THROW(parse("skip(id)"), ParseError);
  EXPECT_THROW(parse("atomic"), ParseError);
  EXPECT_THROW(parse("a $ b"), ParseError);
  try {
    parse("a ; b )");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset, 6u);
  }
}

TEST(Print, Examples) {
  EXPECT_EQ(print(bin(Op::Par, bin(Op::Seq, v("a"), v("b")), v("c"))), "a ; b || c");
  EXPECT_EQ(print(bin(Op::Nondet, v("a"), v("b"))), "a |-| b");
  EXPECT_EQ(print(Expr::postfix(Op::Star, parse("atomic(id)"))), "atomic(id)^*");
  EXPECT_EQ(print(bin(Op::Seq, v("a"), bin(Op::Seq, v("b"), v("c")))), "a ; (b ; c)");
  EXPECT_EQ(print(bin(Op::Nondet, v("a"), bin(Op::Sup, v("b"), v("c")))), "a |-| (b |+| c)");
  EXPECT_EQ(print(parse("pi(~(r + s) & t)")), "pi(~(r + s) & t)");
}

TEST(Print, RoundTripOnRandomAsts) {
  std::mt19937_64 rng(2024);
  RandomExprOptions o;
  o.command_vars = {"c", "d", "x1"};
  o.relation_vars = {"r", "g"};
  o.predicate_vars = {"p"};
  for (int k = 0; k < 10000; ++k) {
    Expr e = random_expr(rng, 1 + k % 5, o);
    std::string text = print(e);
    ASSERT_EQ(parse(text), e) << text;
  }
}

TEST(Eval, Examples) {
  ModelConfig cfg{2, 2};
  EXPECT_EQ(eval("nil", {}, cfg), guard(StatePredicate::all_states(2), cfg));
  EXPECT_EQ(eval("bot // bot", {}, cfg), bottom(cfg));
  std::mt19937_64 rng(4);
  for (int k = 0; k < 20; ++k) {
    auto c = oracle::random_command(cfg, rng);
    Binding b;
    b.set("x", c);
    EXPECT_EQ(eval("x || skip", b, cfg), c);
  }
  Binding r;
  r.set("r", StateRelation::from_pairs(2, {{0, 1}})).set("p", StatePredicate::from_states(2, {1}));
  EXPECT_EQ(eval("pi(r + id)", r, cfg), pstep(StateRelation::from_pairs(2, {{0, 1}, {0, 0}, {1, 1}}), cfg));
  EXPECT_EQ(eval("guard(~p)", r, cfg), guard(StatePredicate::from_states(2, {0}), cfg));
}

TEST(Eval, AgreesWithModuleCalls) {
  ModelConfig cfg{2, 2};
  std::mt19937_64 rng(8);
  auto a = oracle::random_command(cfg, rng);
  auto b = oracle::random_command(cfg, rng);
  Binding bd;
  bd.set("a", a).set("b", b);
  EXPECT_EQ(eval("a |-| b", bd, cfg), nondet(a, b));
  EXPECT_EQ(eval("a |+| b", bd, cfg), supremum(a, b));
  EXPECT_EQ(eval("a || b", bd, cfg), par(a, b));
  EXPECT_EQ(eval("a && b", bd, cfg), conj(a, b));
  EXPECT_EQ(eval("a // b", bd, cfg), quotient(a, b));
  EXPECT_EQ(eval("a ; b", bd, cfg), seq(a, b));
  EXPECT_EQ(eval("a^*", bd, cfg), star(a));
  EXPECT_EQ(eval("a^o", bd, cfg), omega(a));
  EXPECT_EQ(eval("a^*!", bd, cfg), star_skip(a));
  EXPECT_EQ(eval("a^o!", bd, cfg), omega_skip(a));
  auto id = StateRelation::identity(2);
  EXPECT_EQ(eval("eps(id)", {}, cfg), estep(id, cfg));
  EXPECT_EQ(eval("epsx(id)", {}, cfg), estep_abort(id, cfg));
  EXPECT_EQ(eval("atomic(id)", {}, cfg), atomic(id, cfg));
  EXPECT_EQ(eval("env(id)", {}, cfg), envc(id, cfg));
  EXPECT_EQ(eval("spec(id)", {}, cfg), spec_cmd(id, cfg));
  EXPECT_EQ(eval("fin(id)", {}, cfg), fin_guar(id, cfg));
  EXPECT_EQ(eval("inf(id)", {}, cfg), inf_guar(id, cfg));
  EXPECT_EQ(eval("pre({0})", {}, cfg), precond(StatePredicate::from_states(2, {0}), cfg));
  EXPECT_EQ(eval("chaos", {}, cfg), chaos_cmd(cfg));
  EXPECT_EQ(eval("term", {}, cfg), term_cmd(cfg));
}

TEST(Eval, Errors) {
  ModelConfig cfg{2, 2};
  EXPECT_THROW(eval("x", {}, cfg), EvalError);
  Binding b;
  b.set("x", StateRelation::identity(2));
  EXPECT_THROW(eval("x", b, cfg), EvalError);
  EXPECT_THROW(eval("pi({(0,2)})", {}, cfg), EvalError);
  EXPECT_THROW(eval("_ ; skip", {}, cfg), EvalError);
  Binding other;
  other.set("x", top(ModelConfig{1, 2}));
  EXPECT_THROW(eval("x", other, cfg), ConfigMismatch);
}

TEST(Transformer, Contexts) {
  ModelConfig cfg{1, 2};
  auto c = pstep(StateRelation::universal(1), cfg);
  Binding b;
  b.set("c", c);
  auto f = to_transformer(parse("nil |-| (c ; _)"), b, cfg);
  EXPECT_EQ(lfp(f, cfg), omega(c));
  auto ident = to_transformer(parse("_"), {}, cfg);
  EXPECT_EQ(ident(c), c);
  EXPECT_THROW(to_transformer(parse("k"), {}, cfg), EvalError);
  EXPECT_THROW(to_transformer(parse("_ ; _"), {}, cfg), EvalError);
}
