#pragma once

#include <algorithm>
#include <any>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgalg/bitset.hpp"
#include "rgalg/config.hpp"
#include "rgalg/trace.hpp"

namespace rgalg {

/// Number of traces in the bounded universe, or nullopt past `ceiling`.
inline std::optional<std::size_t> universe_size(int states, int max_len, std::size_t ceiling) {
  // sub[r]: traces in the subtree below an unterminated node with r steps left
  long double sub = 1;
  std::size_t exact = 1;
  for (int r = 1; r <= max_len; ++r) {
    sub = 4 + 2.0L * states * sub;
    if (sub * states > static_cast<long double>(ceiling)) return std::nullopt;
    exact = 4 + 2 * static_cast<std::size_t>(states) * exact;
  }
  std::size_t total = exact * static_cast<std::size_t>(states);
  if (total > ceiling) return std::nullopt;
  return total;
}

/// Indexed universe of all valid traces for a ModelConfig.
///
/// Traces are numbered in canonical order, which is a depth-first walk of the
/// trace trie, so every subtree occupies a contiguous index range. Step codes
/// are 0..N-1 for p<k>, N..2N-1 for e<k>, then pX, eX, !.
class Universe {
 public:
  using Index = std::uint32_t;
  static constexpr Index npos = ~Index{0};

  explicit Universe(const ModelConfig& cfg) : cfg_(cfg) {
    validate(cfg);
    auto total = universe_size(cfg.states, cfg.max_len, cfg.max_traces);
    if (!total) {
      throw CapacityError("universe for states=" + std::to_string(cfg.states) +
                          " max_len=" + std::to_string(cfg.max_len) + " exceeds " +
                          std::to_string(cfg.max_traces) + " traces");
    }
    n_ = cfg.states;
    sub_.assign(static_cast<std::size_t>(cfg.max_len) + 1, 1);
    for (int r = 1; r <= cfg.max_len; ++r) sub_[r] = 4 + 2 * static_cast<std::size_t>(n_) * sub_[r - 1];
    size_ = *total;
    parent_.resize(size_);
    code_.resize(size_);
    depth_.resize(size_);
    state_.resize(size_);
    for (int s = 0; s < n_; ++s) build(root(s), npos, -1, 0, s);
  }

  /// Shared instance per (states, max_len, max_traces).
  static std::shared_ptr<const Universe> get(const ModelConfig& cfg) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, std::size_t>, std::weak_ptr<const Universe>> reg;
    std::lock_guard lock(mu);
    auto key = std::make_tuple(cfg.states, cfg.max_len, cfg.max_traces);
    if (auto it = reg.find(key); it != reg.end()) {
      if (auto sp = it->second.lock()) return sp;
    }
    auto sp = std::make_shared<const Universe>(cfg);
    reg[key] = sp;
    return sp;
  }

  const ModelConfig& config() const { return cfg_; }
  std::size_t size() const { return size_; }
  int states() const { return n_; }
  int max_len() const { return cfg_.max_len; }
  int num_codes() const { return 2 * n_ + 3; }

  int code_pabort() const { return 2 * n_; }
  int code_eabort() const { return 2 * n_ + 1; }
  int code_done() const { return 2 * n_ + 2; }
  int code_program(int s) const { return s; }
  int code_env(int s) const { return n_ + s; }
  bool code_terminal(int c) const { return c >= 2 * n_; }

  Index root(int s) const { return static_cast<Index>(s * sub_[cfg_.max_len]); }
  Index parent(Index t) const { return parent_[t]; }
  /// Code of the last step, or -1 for an empty trace.
  int last_code(Index t) const { return code_[t]; }
  int depth(Index t) const { return depth_[t]; }
  /// State after the last program or environment step.
  int state(Index t) const { return state_[t]; }
  int initial(Index t) const { return static_cast<int>(t / sub_[cfg_.max_len]); }
  bool terminal(Index t) const { return code_[t] >= 2 * n_; }
  bool ends_pabort(Index t) const { return code_[t] == 2 * n_; }
  bool ends_done(Index t) const { return code_[t] == 2 * n_ + 2; }
  bool extendable(Index t) const { return !terminal(t) && depth_[t] < cfg_.max_len; }

  /// Child of an extendable node along `code`.
  Index child(Index t, int code) const {
    std::size_t below = sub_[cfg_.max_len - depth_[t] - 1];
    if (code < 2 * n_) return static_cast<Index>(t + 1 + code * below);
    return static_cast<Index>(t + 1 + 2 * n_ * below + (code - 2 * n_));
  }
  /// One past the last index of the subtree rooted at t.
  Index subtree_end(Index t) const {
    if (terminal(t)) return t + 1;
    return static_cast<Index>(t + sub_[cfg_.max_len - depth_[t]]);
  }

  Step step_of_code(int c) const {
    if (c < n_) return Step::program(c);
    if (c < 2 * n_) return Step::env(c - n_);
    if (c == 2 * n_) return Step::program_abort();
    if (c == 2 * n_ + 1) return Step::env_abort();
    return Step::done();
  }
  int code_of_step(const Step& s) const {
    switch (s.kind) {
      case StepKind::Program: return s.target;
      case StepKind::Env: return n_ + s.target;
      case StepKind::ProgramAbort: return 2 * n_;
      case StepKind::EnvAbort: return 2 * n_ + 1;
      case StepKind::Termination: return 2 * n_ + 2;
    }
    return -1;
  }

  Trace trace_at(Index t) const {
    Trace tr;
    tr.initial = initial(t);
    tr.steps.resize(depth_[t]);
    for (Index x = t; code_[x] >= 0; x = parent_[x]) tr.steps[depth_[x] - 1] = step_of_code(code_[x]);
    return tr;
  }

  /// Index of a trace; throws ValueError if it is not valid under the config.
  Index index_of(const Trace& tr) const {
    if (!valid_trace(tr, cfg_)) throw ValueError("trace " + to_string(tr) + " is not valid for this model");
    Index t = root(tr.initial);
    for (const auto& s : tr.steps) t = child(t, code_of_step(s));
    return t;
  }

  Bits empty_set() const { return Bits(size_); }
  Bits full_set() const { return Bits(size_, true); }
  Bits roots() const {
    Bits b(size_);
    for (int s = 0; s < n_; ++s) b.set(root(s));
    return b;
  }

  // Closures over index sets.

  Bits prefix_close(Bits b) const {
    for (int s = 0; s < n_; ++s) b.set(root(s));
    for (std::size_t t = size_; t-- > 0;) {
      if (b.test(t) && parent_[t] != npos) b.set(parent_[t]);
    }
    return b;
  }

  /// For every u⌢[pX] present, adds every valid extension of u.
  Bits abort_close(Bits b) const {
    std::vector<Index> hits;
    b.for_each([&](std::size_t t) {
      if (code_[t] == 2 * n_) hits.push_back(static_cast<Index>(t));
    });
    for (Index x : hits) {
      Index u = parent_[x];
      b.set_range(u, subtree_end(u));
    }
    return b;
  }

  Bits close(Bits b) const {
    for (;;) {
      Bits next = abort_close(prefix_close(b));
      if (next == b) return next;
      b = std::move(next);
    }
  }

  bool is_closed(const Bits& b) const {
    for (int s = 0; s < n_; ++s) {
      if (!b.test(root(s))) return false;
    }
    bool ok = true;
    b.for_each([&](std::size_t t) {
      if (!ok) return;
      if (parent_[t] != npos && !b.test(parent_[t])) ok = false;
      if (code_[t] == 2 * n_) {
        Index u = parent_[t];
        if (!b.all_in_range(u, subtree_end(u))) ok = false;
      }
    });
    return ok;
  }

  /// Largest closed subset of b (b must contain every root).
  Bits closed_interior(Bits b) const {
    for (;;) {
      bool changed = false;
      for (std::size_t t = 0; t < size_; ++t) {
        if (b.test(t) && parent_[t] != npos && !b.test(parent_[t])) {
          b.reset(t);
          changed = true;
        }
      }
      // Bottom-up: full[t] iff the whole subtree of t survives.
      std::vector<char> full(size_, 0);
      for (std::size_t t = size_; t-- > 0;) {
        if (!b.test(t)) continue;
        if (terminal(static_cast<Index>(t)) || depth_[t] == cfg_.max_len) {
          full[t] = 1;
          continue;
        }
        Index ti = static_cast<Index>(t);
        bool others = true;
        for (int c = 0; c < num_codes(); ++c) {
          if (c == 2 * n_) continue;
          if (!full[child(ti, c)]) {
            others = false;
            break;
          }
        }
        Index px = child(ti, 2 * n_);
        if (b.test(px) && !others) {
          b.reset(px);
          full[px] = 0;
          changed = true;
        }
        full[t] = others && b.test(px);
      }
      if (!changed) return b;
    }
  }

  Bits from_traces(const TraceSet& ts) const {
    Bits b(size_);
    for (const auto& t : ts) b.set(index_of(t));
    return b;
  }
  TraceSet to_traces(const Bits& b) const {
    TraceSet out;
    b.for_each([&](std::size_t t) { out.insert(out.end(), trace_at(static_cast<Index>(t))); });
    return out;
  }

  /// Per-universe memo table for derived constants (skip, chaos, ...).
  template <class T, class F>
  T memo(const std::string& key, F&& make) const {
    {
      std::lock_guard lock(memo_mu_);
      if (auto it = memo_.find(key); it != memo_.end()) return std::any_cast<T>(it->second);
    }
    T value = make();
    std::lock_guard lock(memo_mu_);
    memo_.emplace(key, value);
    return value;
  }

 private:
  void build(Index t, Index parent, int code, int depth, int state) {
    // Iterative walk; each frame is an unterminated node.
    struct Frame {
      Index t, parent;
      int code, depth, state;
    };
    std::vector<Frame> stack{{t, parent, code, depth, state}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      parent_[f.t] = f.parent;
      code_[f.t] = static_cast<std::int16_t>(f.code);
      depth_[f.t] = static_cast<std::uint8_t>(f.depth);
      state_[f.t] = static_cast<std::int16_t>(f.state);
      if (f.code >= 2 * n_ || f.depth == cfg_.max_len) continue;
      for (int c = 0; c < num_codes(); ++c) {
        int ns = c < n_ ? c : (c < 2 * n_ ? c - n_ : f.state);
        stack.push_back({child(f.t, c), f.t, c, f.depth + 1, ns});
      }
    }
  }

  ModelConfig cfg_;
  int n_ = 0;
  std::size_t size_ = 0;
  std::vector<std::size_t> sub_;
  std::vector<Index> parent_;
  std::vector<std::int16_t> code_;
  std::vector<std::uint8_t> depth_;
  std::vector<std::int16_t> state_;
  mutable std::mutex memo_mu_;
  mutable std::map<std::string, std::any> memo_;
};

// TraceSet-level API.

inline TraceSet enumerate_universe(const ModelConfig& cfg) {
  auto u = Universe::get(cfg);
  return u->to_traces(u->full_set());
}

inline TraceSet prefix_close(const TraceSet& ts, const ModelConfig& cfg) {
  auto u = Universe::get(cfg);
  return u->to_traces(u->prefix_close(u->from_traces(ts)));
}

inline TraceSet abort_close(const TraceSet& ts, const ModelConfig& cfg) {
  auto u = Universe::get(cfg);
  return u->to_traces(u->abort_close(u->from_traces(ts)));
}

inline TraceSet close(const TraceSet& ts, const ModelConfig& cfg) {
  auto u = Universe::get(cfg);
  return u->to_traces(u->close(u->from_traces(ts)));
}

}  // namespace rgalg
