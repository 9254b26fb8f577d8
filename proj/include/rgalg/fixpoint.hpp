#pragma once

#include <functional>
#include <vector>

#include "rgalg/command.hpp"

namespace rgalg {

using CommandTransformer = std::function<Command(const Command&)>;

namespace detail {
inline Command iterate(const CommandTransformer& f, Command x, const char* which) {
  std::size_t limit = x.universe().size() + 1;
  for (std::size_t i = 0; i <= limit; ++i) {
    Command y = f(x);
    if (y == x) return x;
    x = std::move(y);
  }
  throw MonotonicityError(std::string(which) + " iteration did not stabilise; transformer is not monotone");
}
}  // namespace detail

/// Least fixed point in the refinement order, iterating upward from bottom.
inline Command lfp(const CommandTransformer& f, const ModelConfig& cfg) {
  return detail::iterate(f, bottom(cfg), "lfp");
}

/// Greatest fixed point in the refinement order, iterating downward from top.
inline Command gfp(const CommandTransformer& f, const ModelConfig& cfg) {
  return detail::iterate(f, top(cfg), "gfp");
}

/// Checks x ⊑ y ⇒ f(x) ⊑ f(y) over every ordered pair of the pool.
inline bool is_monotone_on_pool(const CommandTransformer& f, const std::vector<Command>& pool) {
  std::vector<Command> images;
  images.reserve(pool.size());
  for (const auto& c : pool) images.push_back(f(c));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (refines(pool[i], pool[j]) && !refines(images[i], images[j])) return false;
    }
  }
  return true;
}

}  // namespace rgalg
