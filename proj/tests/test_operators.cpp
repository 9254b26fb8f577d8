#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace rgalg;

namespace {

TraceSet ts(std::initializer_list<const char*> xs) {
  TraceSet out;
  for (auto x : xs) out.insert(parse_trace(x));
  return out;
}

}  // namespace

TEST(Operators, MatchOracleOnRandomCommands) {
  std::mt19937_64 rng(1);
  for (auto cfg : {ModelConfig{1, 2}, ModelConfig{2, 2}, ModelConfig{2, 3}}) {
    for (int k = 0; k < 80; ++k) {
      double p = k % 2 ? 0.05 : 0.15;
      auto c = oracle::random_command(cfg, rng, p, 0.01);
      auto d = oracle::random_command(cfg, rng, p, 0.01);
      auto ct = c.traces();
      auto dt = d.traces();
      EXPECT_EQ(seq(c, d).traces(), oracle::seq(ct, dt, cfg));
      EXPECT_EQ(par(c, d).traces(), oracle::par(ct, dt, cfg));
      EXPECT_EQ(conj(c, d).traces(), oracle::conj(ct, dt, cfg));
    }
  }
}

TEST(Operators, ResultsAreClosed) {
  std::mt19937_64 rng(2);
  ModelConfig cfg{2, 3};
  for (int k = 0; k < 200; ++k) {
    auto c = oracle::random_command(cfg, rng);
    auto d = oracle::random_command(cfg, rng);
    for (const auto& r : {seq(c, d), par(c, d), conj(c, d), star(c), omega(c), quotient(c, d)}) {
      EXPECT_TRUE(r.universe().is_closed(r.bits()));
    }
  }
}

TEST(Operators, SequentialExamples) {
  ModelConfig cfg{1, 2};
  auto c = Command::from_traces(cfg, ts({"0:[p0,!]"}));
  EXPECT_EQ(seq(c, nil(cfg)), c);
  EXPECT_EQ(seq(nil(cfg), c), c);
  EXPECT_EQ(seq(bottom(cfg), c), bottom(cfg));
  EXPECT_EQ(seq(top(cfg), c), top(cfg));
  // splice exceeding the bound is truncated and loses its termination
  auto cc = seq(c, c);
  EXPECT_EQ(cc.traces(), ts({"0:[]", "0:[p0]", "0:[p0,p0]"}));
}

TEST(Operators, ParallelExamples) {
  ModelConfig cfg{1, 2};
  auto p = Command::from_traces(cfg, ts({"0:[p0,!]"}));
  EXPECT_EQ(par(p, skip_cmd(cfg)), p);
  EXPECT_EQ(par(top(cfg), bottom(cfg)), top(cfg));
  // program against program never synchronises
  EXPECT_EQ(par(p, p), top(cfg));
  // program abort against environment abort aborts the composition
  auto pa = Command::from_traces(cfg, ts({"0:[pX]"}));
  auto ea = Command::from_traces(cfg, ts({"0:[eX]"}));
  EXPECT_EQ(par(pa, ea), bottom(cfg));
}

TEST(Operators, ConjunctionExamples) {
  ModelConfig cfg{1, 2};
  auto c = Command::from_traces(cfg, ts({"0:[p0,!]"}));
  EXPECT_EQ(conj(c, c), c);
  EXPECT_EQ(conj(c, bottom(cfg)), bottom(cfg));
  EXPECT_EQ(conj(c, chaos_cmd(cfg)), c);
  auto d = Command::from_traces(cfg, ts({"0:[e0,!]"}));
  EXPECT_EQ(conj(c, d), top(cfg));
}

TEST(Operators, Iteration) {
  ModelConfig cfg{1, 3};
  auto c = pstep(StateRelation::universal(1), cfg);
  auto s = star(c);
  auto o = omega(c);
  EXPECT_EQ(s, nondet(nil(cfg), seq(c, s)));
  EXPECT_EQ(o, nondet(nil(cfg), seq(c, o)));
  EXPECT_TRUE(refines(o, s));
  // nil° aborts, nil⋆ = nil
  EXPECT_EQ(omega(nil(cfg)), bottom(cfg));
  EXPECT_EQ(star(nil(cfg)), nil(cfg));
  EXPECT_TRUE(s.contains(parse_trace("0:[p0,p0,!]")));
  EXPECT_FALSE(s.contains(parse_trace("0:[pX]")));
  auto sk = skip_cmd(cfg);
  EXPECT_EQ(star_skip(c), seq(star(c), sk));
  EXPECT_EQ(omega_skip(c), seq(omega(c), sk));
}
