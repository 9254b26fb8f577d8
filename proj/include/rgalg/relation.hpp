#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rgalg/config.hpp"

namespace rgalg {

/// Subset of Σ×Σ over a fixed state count.
class StateRelation {
 public:
  StateRelation() = default;
  explicit StateRelation(int states) : n_(states), m_(static_cast<std::size_t>(states) * states, 0) {}

  static StateRelation identity(int n) {
    StateRelation r(n);
    for (int s = 0; s < n; ++s) r.add(s, s);
    return r;
  }
  static StateRelation universal(int n) {
    StateRelation r(n);
    for (auto& x : r.m_) x = 1;
    return r;
  }
  static StateRelation empty(int n) { return StateRelation(n); }
  static StateRelation from_pairs(int n, const std::vector<std::pair<int, int>>& ps) {
    StateRelation r(n);
    for (auto [a, b] : ps) r.add(a, b);
    return r;
  }
  /// The relation whose membership bits are the binary digits of `mask`.
  static StateRelation from_mask(int n, unsigned long long mask) {
    StateRelation r(n);
    for (std::size_t i = 0; i < r.m_.size(); ++i) r.m_[i] = (mask >> i) & 1u;
    return r;
  }
  /// All 2^(N*N) relations, in mask order.
  static std::vector<StateRelation> all(int n) {
    if (n * n > 20) throw CapacityError("relation space too large to enumerate");
    std::vector<StateRelation> out;
    for (unsigned long long m = 0; m < (1ull << (n * n)); ++m) out.push_back(from_mask(n, m));
    return out;
  }

  int states() const { return n_; }
  bool contains(int a, int b) const { return m_[idx(a, b)] != 0; }
  void add(int a, int b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw ValueError("state out of range in relation");
    m_[idx(a, b)] = 1;
  }

  StateRelation unite(const StateRelation& o) const {
    StateRelation r = *this;
    for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] |= o.m_[i];
    return r;
  }
  StateRelation intersect(const StateRelation& o) const {
    StateRelation r = *this;
    for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] &= o.m_[i];
    return r;
  }
  StateRelation complement() const {
    StateRelation r = *this;
    for (auto& x : r.m_) x = !x;
    return r;
  }
  bool subset_of(const StateRelation& o) const {
    for (std::size_t i = 0; i < m_.size(); ++i) {
      if (m_[i] && !o.m_[i]) return false;
    }
    return true;
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (contains(a, b)) out.emplace_back(a, b);
      }
    }
    return out;
  }

  /// Literal text, e.g. {(0,1),(1,0)}.
  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (auto [a, b] : pairs()) {
      if (!first) out += ',';
      first = false;
      out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return out + "}";
  }

  std::string key() const { return std::string(m_.begin(), m_.end()); }

  friend bool operator==(const StateRelation&, const StateRelation&) = default;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }
  int n_ = 0;
  std::vector<char> m_;
};

/// Subset of Σ.
class StatePredicate {
 public:
  StatePredicate() = default;
  explicit StatePredicate(int states) : n_(states), m_(static_cast<std::size_t>(states), 0) {}

  static StatePredicate all_states(int n) {
    StatePredicate p(n);
    for (auto& x : p.m_) x = 1;
    return p;
  }
  static StatePredicate empty(int n) { return StatePredicate(n); }
  static StatePredicate from_states(int n, const std::vector<int>& ss) {
    StatePredicate p(n);
    for (int s : ss) p.add(s);
    return p;
  }
  static StatePredicate from_mask(int n, unsigned long long mask) {
    StatePredicate p(n);
    for (int i = 0; i < n; ++i) p.m_[i] = (mask >> i) & 1u;
    return p;
  }
  static std::vector<StatePredicate> all(int n) {
    if (n > 20) throw CapacityError("predicate space too large to enumerate");
    std::vector<StatePredicate> out;
    for (unsigned long long m = 0; m < (1ull << n); ++m) out.push_back(from_mask(n, m));
    return out;
  }

  int states() const { return n_; }
  bool contains(int s) const { return m_[static_cast<std::size_t>(s)] != 0; }
  void add(int s) {
    if (s < 0 || s >= n_) throw ValueError("state out of range in predicate");
    m_[static_cast<std::size_t>(s)] = 1;
  }

  StatePredicate unite(const StatePredicate& o) const {
    StatePredicate p = *this;
    for (std::size_t i = 0; i < m_.size(); ++i) p.m_[i] |= o.m_[i];
    return p;
  }
  StatePredicate intersect(const StatePredicate& o) const {
    StatePredicate p = *this;
    for (std::size_t i = 0; i < m_.size(); ++i) p.m_[i] &= o.m_[i];
    return p;
  }
  StatePredicate complement() const {
    StatePredicate p = *this;
    for (auto& x : p.m_) x = !x;
    return p;
  }
  bool subset_of(const StatePredicate& o) const {
    for (std::size_t i = 0; i < m_.size(); ++i) {
      if (m_[i] && !o.m_[i]) return false;
    }
    return true;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int s = 0; s < n_; ++s) {
      if (contains(s)) out.push_back(s);
    }
    return out;
  }

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (int s : members()) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(s);
    }
    return out + "}";
  }

  std::string key() const { return std::string(m_.begin(), m_.end()); }

  friend bool operator==(const StatePredicate&, const StatePredicate&) = default;

 private:
  int n_ = 0;
  std::vector<char> m_;
};

inline void require_states(int have, const ModelConfig& cfg) {
  if (have != cfg.states) throw ConfigMismatch("relation or predicate built for a different state count");
}

}  // namespace rgalg
