#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using namespace rgalg;

namespace {

TraceSet ts(std::initializer_list<const char*> xs) {
  TraceSet out;
  for (auto x : xs) out.insert(parse_trace(x));
  return out;
}

}  // namespace

TEST(Universe, SizesMatchEnumeration) {
  for (int n = 1; n <= 3; ++n) {
    for (int l = 0; l <= 3; ++l) {
      ModelConfig cfg{n, l};
      EXPECT_EQ(enumerate_universe(cfg), oracle::universe(cfg)) << n << "," << l;
    }
  }
}

TEST(Universe, KnownCounts) {
  EXPECT_EQ(enumerate_universe({1, 1}).size(), 6u);
  EXPECT_EQ(enumerate_universe({1, 1}), ts({"0:[]", "0:[!]", "0:[p0]", "0:[e0]", "0:[pX]", "0:[eX]"}));
  // 2 initial states x (empty + 4 state steps + 3 terminal steps)
  EXPECT_EQ(enumerate_universe({2, 1}).size(), 16u);
  EXPECT_EQ(enumerate_universe({1, 0}), ts({"0:[]"}));
  EXPECT_EQ(Universe::get({2, 3})->size(), 296u);
}

TEST(Universe, CapacityCeiling) {
  ModelConfig big{4, 12};
  EXPECT_THROW(Universe::get(big), CapacityError);
  ModelConfig tight{2, 3, 100};
  EXPECT_THROW(Universe::get(tight), CapacityError);
  EXPECT_FALSE(universe_size(1000, 1000, kDefaultMaxTraces).has_value());
}

TEST(Universe, IndexRoundTripAndOrder) {
  auto u = Universe::get({2, 3});
  Trace prev;
  for (std::size_t i = 0; i < u->size(); ++i) {
    Trace t = u->trace_at(static_cast<Universe::Index>(i));
    EXPECT_EQ(u->index_of(t), i);
    if (i) EXPECT_LT(prev, t);
    prev = t;
  }
}

TEST(Universe, SubtreeIsContiguous) {
  auto u = Universe::get({2, 2});
  for (Universe::Index t = 0; t < u->size(); ++t) {
    Trace a = u->trace_at(t);
    for (Universe::Index v = 0; v < u->size(); ++v) {
      bool inside = v >= t && v < u->subtree_end(t);
      EXPECT_EQ(inside, oracle::is_prefix(a, u->trace_at(v)));
    }
  }
}

TEST(TraceText, RoundTrip) {
  for (const auto& t : enumerate_universe({2, 2})) EXPECT_EQ(parse_trace(to_string(t)), t);
  EXPECT_EQ(to_string(parse_trace(" 1 : [ p0 , eX ] ")), "1:[p0,eX]");
  EXPECT_THROW(parse_trace("0:[p]"), ValueError);
  EXPECT_THROW(parse_trace("0:[q1]"), ValueError);
  EXPECT_THROW(parse_trace("0[p1]"), ValueError);
}

TEST(ValidTrace, Rules) {
  ModelConfig cfg{2, 3};
  EXPECT_TRUE(valid_trace(parse_trace("1:[p0,e1,!]"), cfg));
  EXPECT_FALSE(valid_trace(parse_trace("0:[!,p0]"), cfg));
  EXPECT_FALSE(valid_trace(parse_trace("0:[pX,eX]"), cfg));
  EXPECT_FALSE(valid_trace(parse_trace("2:[]"), cfg));
  EXPECT_FALSE(valid_trace(parse_trace("0:[p2]"), cfg));
  EXPECT_FALSE(valid_trace(parse_trace("0:[p0,p0,p0,p0]"), cfg));
}

TEST(StepOrder, Canonical) {
  EXPECT_LT(Step::program(1), Step::env(0));
  EXPECT_LT(Step::env(1), Step::program_abort());
  EXPECT_LT(Step::program_abort(), Step::env_abort());
  EXPECT_LT(Step::env_abort(), Step::done());
  EXPECT_LT(parse_trace("0:[]"), parse_trace("0:[p0]"));
  EXPECT_LT(parse_trace("0:[p0,!]"), parse_trace("0:[p1]"));
  EXPECT_LT(parse_trace("0:[!]"), parse_trace("1:[]"));
}

TEST(Closure, Examples) {
  EXPECT_EQ(prefix_close({}, {2, 2}), ts({"0:[]", "1:[]"}));
  EXPECT_EQ(prefix_close(ts({"0:[p0,!]"}), {1, 2}), ts({"0:[]", "0:[p0]", "0:[p0,!]"}));
  EXPECT_EQ(prefix_close(ts({"0:[e1]"}), {2, 2}), ts({"0:[]", "1:[]", "0:[e1]"}));
  EXPECT_EQ(abort_close(ts({"0:[pX]"}), {1, 1}),
            ts({"0:[pX]", "0:[]", "0:[!]", "0:[p0]", "0:[e0]", "0:[eX]"}));
  // environment aborts trigger nothing
  EXPECT_EQ(abort_close(ts({"0:[eX]"}), {1, 1}), ts({"0:[eX]"}));
  EXPECT_EQ(close(ts({"0:[p0,!]"}), {1, 2}), ts({"0:[]", "0:[p0]", "0:[p0,!]"}));
  EXPECT_EQ(close(ts({"0:[p0,pX]"}), {1, 2}).size(), 7u);
}

TEST(Closure, MatchesOracleOnRandomSets) {
  std::mt19937_64 rng(7);
  for (auto cfg : {ModelConfig{1, 2}, ModelConfig{2, 2}, ModelConfig{2, 3}}) {
    auto all = oracle::universe(cfg);
    std::vector<Trace> v(all.begin(), all.end());
    for (int k = 0; k < 60; ++k) {
      TraceSet s;
      std::bernoulli_distribution coin(k % 3 == 0 ? 0.02 : 0.1);
      for (auto& t : v) {
        if (coin(rng)) s.insert(t);
      }
      EXPECT_EQ(prefix_close(s, cfg), oracle::prefix_close(s, cfg));
      EXPECT_EQ(abort_close(s, cfg), oracle::abort_close(s, cfg));
      auto c = close(s, cfg);
      EXPECT_EQ(c, oracle::close(s, cfg));
      EXPECT_EQ(close(c, cfg), c);
      EXPECT_TRUE(oracle::subset(s, c));
    }
  }
}

TEST(Closure, InteriorIsLargestClosedSubset) {
  ModelConfig cfg{1, 2};
  auto u = Universe::get(cfg);
  auto closed = oracle::all_commands(cfg);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    Bits b = u->roots();
    for (std::size_t t = 0; t < u->size(); ++t) {
      if (rng() % 3) b.set(t);
    }
    Bits expect = u->roots();
    for (const auto& c : closed) {
      if (c.bits().subset_of(b)) expect |= c.bits();
    }
    EXPECT_EQ(u->closed_interior(b), expect);
  }
}

TEST(Command, ConfigMismatch) {
  EXPECT_THROW(refines(top({1, 2}), top({1, 3})), ConfigMismatch);
  EXPECT_THROW(nondet(top({2, 2}), bottom({1, 2})), ConfigMismatch);
}
