#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgalg/universe.hpp"

namespace rgalg {

/// A closed set of traces over a bounded universe.
///
/// Refinement is reverse inclusion: c ⊑ d iff d ⊆ c. The universe is the
/// least element and the set of empty traces is the greatest.
class Command {
 public:
  Command() = default;

  /// Wraps an index set that is already closed.
  static Command from_closed(std::shared_ptr<const Universe> u, Bits bits) {
    return Command(std::move(u), std::move(bits));
  }
  /// Closes an arbitrary index set.
  static Command closure_of(std::shared_ptr<const Universe> u, const Bits& bits) {
    Bits b = u->close(bits);
    return Command(std::move(u), std::move(b));
  }
  static Command from_traces(const ModelConfig& cfg, const TraceSet& ts) {
    auto u = Universe::get(cfg);
    return closure_of(u, u->from_traces(ts));
  }

  const Universe& universe() const { return *u_; }
  const std::shared_ptr<const Universe>& universe_ptr() const { return u_; }
  const ModelConfig& config() const { return u_->config(); }
  const Bits& bits() const { return bits_; }
  bool valid() const { return static_cast<bool>(u_); }

  TraceSet traces() const { return u_->to_traces(bits_); }
  std::size_t size() const { return bits_.count(); }
  bool contains(const Trace& t) const {
    if (!valid_trace(t, config())) return false;
    return bits_.test(u_->index_of(t));
  }

  friend bool operator==(const Command& a, const Command& b) {
    return a.u_ == b.u_ && a.bits_ == b.bits_;
  }

 private:
  Command(std::shared_ptr<const Universe> u, Bits b) : u_(std::move(u)), bits_(std::move(b)) {}

  std::shared_ptr<const Universe> u_;
  Bits bits_;
};

struct CommandHash {
  std::size_t operator()(const Command& c) const { return c.bits().hash(); }
};

inline void require_same(const Command& a, const Command& b) {
  if (!a.valid() || !b.valid()) throw ConfigMismatch("uninitialised command");
  if (a.universe_ptr() != b.universe_ptr()) {
    throw ConfigMismatch("commands built under different model configurations");
  }
}

inline Command bottom(const ModelConfig& cfg) {
  auto u = Universe::get(cfg);
  return Command::from_closed(u, u->full_set());
}

inline Command top(const ModelConfig& cfg) {
  auto u = Universe::get(cfg);
  return Command::from_closed(u, u->roots());
}

/// c ⊑ d
inline bool refines(const Command& c, const Command& d) {
  require_same(c, d);
  return d.bits().subset_of(c.bits());
}

/// A trace of d that c lacks, witnessing c ⋢ d.
inline std::optional<Trace> refinement_witness(const Command& c, const Command& d) {
  require_same(c, d);
  std::size_t i = d.bits().first_not_in(c.bits());
  if (i == d.bits().size()) return std::nullopt;
  return c.universe().trace_at(static_cast<Universe::Index>(i));
}

/// Non-deterministic choice (union). Empty input yields top.
inline Command nondet(const std::vector<Command>& cs, const ModelConfig& cfg) {
  if (cs.empty()) return top(cfg);
  Bits b = cs.front().bits();
  for (std::size_t i = 1; i < cs.size(); ++i) {
    require_same(cs.front(), cs[i]);
    b |= cs[i].bits();
  }
  return Command::from_closed(cs.front().universe_ptr(), std::move(b));
}

/// Supremum (intersection). Empty input yields bottom.
inline Command supremum(const std::vector<Command>& cs, const ModelConfig& cfg) {
  if (cs.empty()) return bottom(cfg);
  Bits b = cs.front().bits();
  for (std::size_t i = 1; i < cs.size(); ++i) {
    require_same(cs.front(), cs[i]);
    b &= cs[i].bits();
  }
  return Command::from_closed(cs.front().universe_ptr(), std::move(b));
}

inline Command nondet(const Command& a, const Command& b) {
  require_same(a, b);
  return Command::from_closed(a.universe_ptr(), a.bits() | b.bits());
}

inline Command supremum(const Command& a, const Command& b) {
  require_same(a, b);
  return Command::from_closed(a.universe_ptr(), a.bits() & b.bits());
}

inline std::string render(const Command& c, const std::string& sep = "\n") {
  std::string out;
  bool first = true;
  c.bits().for_each([&](std::size_t t) {
    if (!first) out += sep;
    first = false;
    out += to_string(c.universe().trace_at(static_cast<Universe::Index>(t)));
  });
  return out;
}

}  // namespace rgalg
