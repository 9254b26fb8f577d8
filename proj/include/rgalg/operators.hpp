#pragma once

#include <array>
#include <vector>

#include "rgalg/fixpoint.hpp"

namespace rgalg {

namespace detail {

/// Adds u⌢v to `out` for every v in d starting at d_root, where u is at
/// out_root. Extensions past the length bound are dropped; their truncations
/// are prefixes already added.
inline void graft(const Universe& U, const Bits& d, Universe::Index d_root, Universe::Index out_root,
                  Bits& out) {
  std::vector<std::pair<Universe::Index, Universe::Index>> stack{{d_root, out_root}};
  const int K = U.num_codes();
  while (!stack.empty()) {
    auto [dn, on] = stack.back();
    stack.pop_back();
    out.set(on);
    if (!U.extendable(on) || !U.extendable(dn)) continue;
    for (int c = 0; c < K; ++c) {
      Universe::Index dc = U.child(dn, c);
      if (d.test(dc)) stack.emplace_back(dc, U.child(on, c));
    }
  }
}

struct Match {
  int left, right, result;
};

/// Step pairs that synchronise in parallel composition.
inline std::vector<Match> par_matches(const Universe& U) {
  std::vector<Match> m;
  for (int s = 0; s < U.states(); ++s) {
    m.push_back({U.code_program(s), U.code_env(s), U.code_program(s)});
    m.push_back({U.code_env(s), U.code_program(s), U.code_program(s)});
    m.push_back({U.code_env(s), U.code_env(s), U.code_env(s)});
  }
  m.push_back({U.code_pabort(), U.code_eabort(), U.code_pabort()});
  m.push_back({U.code_eabort(), U.code_pabort(), U.code_pabort()});
  m.push_back({U.code_eabort(), U.code_eabort(), U.code_eabort()});
  m.push_back({U.code_done(), U.code_done(), U.code_done()});
  return m;
}

}  // namespace detail

/// Sequential composition c ; d.
inline Command seq(const Command& c, const Command& d) {
  require_same(c, d);
  const Universe& U = c.universe();
  Bits out = c.bits();
  std::vector<Universe::Index> done;
  c.bits().for_each([&](std::size_t t) {
    if (U.ends_done(static_cast<Universe::Index>(t))) done.push_back(static_cast<Universe::Index>(t));
  });
  for (auto x : done) {
    out.reset(x);
    Universe::Index u = U.parent(x);
    detail::graft(U, d.bits(), U.root(U.state(u)), u, out);
  }
  return Command::closure_of(c.universe_ptr(), out);
}

/// Parallel composition c ∥ d.
inline Command par(const Command& c, const Command& d) {
  require_same(c, d);
  const Universe& U = c.universe();
  static thread_local int cached_for = -1;  // the table depends only on the state count
  static thread_local std::vector<detail::Match> matches;
  if (cached_for != U.states()) {
    matches = detail::par_matches(U);
    cached_for = U.states();
  }
  Bits out = U.empty_set();
  struct Frame {
    Universe::Index l, r, o;
  };
  std::vector<Frame> stack;
  for (int s = 0; s < U.states(); ++s) stack.push_back({U.root(s), U.root(s), U.root(s)});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    out.set(f.o);
    if (!U.extendable(f.o)) continue;
    for (const auto& m : matches) {
      Universe::Index l = U.child(f.l, m.left);
      if (!c.bits().test(l)) continue;
      Universe::Index r = U.child(f.r, m.right);
      if (!d.bits().test(r)) continue;
      stack.push_back({l, r, U.child(f.o, m.result)});
    }
  }
  return Command::closure_of(c.universe_ptr(), U.abort_close(out));
}

/// Weak conjunction c ⋓ d.
inline Command conj(const Command& c, const Command& d) {
  require_same(c, d);
  const Universe& U = c.universe();
  Bits out = c.bits() & d.bits();
  Bits either = c.bits() | d.bits();
  either.for_each([&](std::size_t t) {
    auto x = static_cast<Universe::Index>(t);
    if (!U.ends_pabort(x)) return;
    auto u = U.parent(x);
    if ((c.bits().test(x) && d.bits().test(u)) || (d.bits().test(x) && c.bits().test(u))) out.set(x);
  });
  return Command::closure_of(c.universe_ptr(), out);
}

/// Empty-trace-terminating command: {(σ,[]), (σ,[!])}.
inline Command nil_cmd(const ModelConfig& cfg) {
  auto u = Universe::get(cfg);
  return u->memo<Command>("nil", [&] {
    Bits b = u->roots();
    for (int s = 0; s < u->states(); ++s) b.set(u->child(u->root(s), u->code_done()));
    return Command::from_closed(u, std::move(b));
  });
}

/// Finite iteration c^⋆ = νx. nil ⊓ c ; x
inline Command star(const Command& c) {
  const ModelConfig& cfg = c.config();
  Command n = nil_cmd(cfg);
  return gfp([&](const Command& x) { return nondet(n, seq(c, x)); }, cfg);
}

/// Possibly infinite iteration c^ω = μx. nil ⊓ c ; x
inline Command omega(const Command& c) {
  const ModelConfig& cfg = c.config();
  Command n = nil_cmd(cfg);
  return lfp([&](const Command& x) { return nondet(n, seq(c, x)); }, cfg);
}

}  // namespace rgalg
