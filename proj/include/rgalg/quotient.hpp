#pragma once

#include <algorithm>
#include <vector>

#include "rgalg/operators.hpp"

namespace rgalg {

/// Rely quotient c // i: the greatest closed d with par(d, i) ⊆ c.
///
/// A trace of d is admissible when every way of matching it against a trace
/// of i lands inside c; since c is closed the abort closure of those matches
/// stays inside c too. The answer is the largest closed subset of the
/// admissible traces.
inline Command quotient(const Command& c, const Command& i) {
  require_same(c, i);
  const Universe& U = c.universe();
  static thread_local int cached_for = -1;  // the table depends only on the state count
  static thread_local std::vector<detail::Match> matches;
  if (cached_for != U.states()) {
    matches = detail::par_matches(U);
    cached_for = U.states();
  }
  using Index = Universe::Index;
  using Pair = std::pair<Index, Index>;  // (node in i, node in result)
  Bits good = U.empty_set();
  struct Frame {
    Index node;
    std::vector<Pair> pairs;
  };
  std::vector<Frame> stack;
  for (int s = 0; s < U.states(); ++s) stack.push_back({U.root(s), {{U.root(s), U.root(s)}}});
  const int K = U.num_codes();
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    good.set(f.node);
    if (!U.extendable(f.node)) continue;
    for (int a = 0; a < K; ++a) {
      Index child = U.child(f.node, a);
      std::vector<Pair> next;
      bool bad = false;
      for (const auto& [ni, nr] : f.pairs) {
        for (const auto& m : matches) {
          if (m.left != a) continue;
          Index ci = U.child(ni, m.right);
          if (!i.bits().test(ci)) continue;
          Index cr = U.child(nr, m.result);
          if (!c.bits().test(cr)) {
            bad = true;
            break;
          }
          next.emplace_back(ci, cr);
        }
        if (bad) break;
      }
      if (bad) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      stack.push_back({child, std::move(next)});
    }
  }
  return Command::from_closed(c.universe_ptr(), U.closed_interior(std::move(good)));
}

/// Brute-force quotient: union of every closed subset d of `pool` with
/// par(d, i) ⊆ c. `pool` must contain every empty trace.
inline Command quotient_oracle(const Command& c, const Command& i, const TraceSet& pool) {
  require_same(c, i);
  if (pool.size() >= 22) throw CapacityError("oracle pool must have fewer than 22 traces");
  auto u = c.universe_ptr();
  std::vector<Universe::Index> idx;
  for (const auto& t : pool) idx.push_back(u->index_of(t));
  Bits acc = u->roots();
  for (unsigned long m = 0; m < (1ul << idx.size()); ++m) {
    Bits d = u->empty_set();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if ((m >> k) & 1u) d.set(idx[k]);
    }
    if (!u->is_closed(d)) continue;
    Command dc = Command::from_closed(u, d);
    if (par(dc, i).bits().subset_of(c.bits())) acc |= d;
  }
  return Command::closure_of(u, acc);
}

/// (c // i ⊑ d) == (c ⊑ d ∥ i)
inline bool galois_check(const Command& c, const Command& i, const Command& d) {
  return refines(quotient(c, i), d) == refines(c, par(d, i));
}

}  // namespace rgalg
