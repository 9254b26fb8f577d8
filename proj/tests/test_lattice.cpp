#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace rgalg;

TEST(Lattice, BottomAndTop) {
  ModelConfig cfg{2, 2};
  EXPECT_EQ(bottom(cfg).traces(), enumerate_universe(cfg));
  EXPECT_EQ(top(cfg).size(), 2u);
  EXPECT_TRUE(refines(bottom(cfg), top(cfg)));
  EXPECT_FALSE(refines(top(cfg), bottom(cfg)));
}

TEST(Lattice, EmptyChoiceAndSupremum) {
  ModelConfig cfg{1, 2};
  EXPECT_EQ(nondet({}, cfg), top(cfg));
  EXPECT_EQ(supremum({}, cfg), bottom(cfg));
}

TEST(Lattice, RefinesIsPartialOrder) {
  ModelConfig cfg{1, 1};
  auto all = oracle::all_commands(cfg);
  ASSERT_GT(all.size(), 4u);
  for (auto& a : all) {
    EXPECT_TRUE(refines(a, a));
    EXPECT_TRUE(refines(bottom(cfg), a));
    EXPECT_TRUE(refines(a, top(cfg)));
    for (auto& b : all) {
      if (refines(a, b) && refines(b, a)) EXPECT_EQ(a, b);
      EXPECT_EQ(refines(a, b), oracle::subset(b.traces(), a.traces()));
      EXPECT_EQ(refines(a, b), nondet(a, b) == a);
      auto w = refinement_witness(a, b);
      EXPECT_EQ(w.has_value(), !refines(a, b));
      if (w) {
        EXPECT_TRUE(b.contains(*w));
        EXPECT_FALSE(a.contains(*w));
      }
      for (auto& c : all) {
        if (refines(a, b) && refines(b, c)) EXPECT_TRUE(refines(a, c));
      }
    }
  }
}

TEST(Lattice, ChoiceAndSupremumAreBounds) {
  ModelConfig cfg{1, 2};
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    auto a = oracle::random_command(cfg, rng, 0.2, 0.02);
    auto b = oracle::random_command(cfg, rng, 0.2, 0.02);
    auto n = nondet(a, b);
    auto s = supremum(a, b);
    EXPECT_TRUE(refines(n, a));
    EXPECT_TRUE(refines(n, b));
    EXPECT_TRUE(refines(a, s));
    EXPECT_TRUE(refines(b, s));
    EXPECT_TRUE(n.universe().is_closed(n.bits()));
    EXPECT_TRUE(s.universe().is_closed(s.bits()));
  }
}

TEST(Lattice, FixedPoints) {
  ModelConfig cfg{1, 2};
  auto id = [](const Command& x) { return x; };
  EXPECT_EQ(lfp(id, cfg), bottom(cfg));
  EXPECT_EQ(gfp(id, cfg), top(cfg));
  Command k = nil(cfg);
  auto constant = [&](const Command&) { return k; };
  EXPECT_EQ(lfp(constant, cfg), k);
  EXPECT_EQ(gfp(constant, cfg), k);
  Command c = pstep(StateRelation::universal(1), cfg);
  auto gen = [&](const Command& x) { return nondet(nil(cfg), seq(c, x)); };
  EXPECT_EQ(lfp(gen, cfg), omega(c));
  EXPECT_EQ(gfp(gen, cfg), star(c));
}

TEST(Lattice, NonMonotoneTransformerIsReported) {
  ModelConfig cfg{1, 1};
  auto flip = [&](const Command& x) { return x == bottom(cfg) ? top(cfg) : bottom(cfg); };
  EXPECT_THROW(lfp(flip, cfg), MonotonicityError);
  auto pool = oracle::all_commands(cfg);
  EXPECT_FALSE(is_monotone_on_pool(flip, pool));
  auto c = skip_cmd(cfg);
  EXPECT_TRUE(is_monotone_on_pool([&](const Command& x) { return seq(c, x); }, pool));
}
