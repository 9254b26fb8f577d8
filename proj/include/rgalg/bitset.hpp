#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace rgalg {

/// Fixed-width dynamic bitset. All binary operations require equal widths.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n, bool value = false)
      : n_(n), w_((n + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  /// Sets bits [lo, hi).
  void set_range(std::size_t lo, std::size_t hi) {
    while (lo < hi && (lo & 63)) set(lo++);
    while (lo + 64 <= hi) {
      w_[lo >> 6] = ~std::uint64_t{0};
      lo += 64;
    }
    while (lo < hi) set(lo++);
  }

  /// True iff every bit in [lo, hi) is set.
  bool all_in_range(std::size_t lo, std::size_t hi) const {
    while (lo < hi && (lo & 63)) {
      if (!test(lo++)) return false;
    }
    while (lo + 64 <= hi) {
      if (w_[lo >> 6] != ~std::uint64_t{0}) return false;
      lo += 64;
    }
    while (lo < hi) {
      if (!test(lo++)) return false;
    }
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (auto w : w_) {
      if (w) return false;
    }
    return true;
  }

  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  /// this &= ~o
  Bits& subtract(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  /// True iff this is a subset of o.
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] & ~o.w_[i]) return false;
    }
    return true;
  }

  /// Index of the first set bit that is not in o, or size() if none.
  std::size_t first_not_in(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t d = w_[i] & ~o.w_[i];
      if (d) return i * 64 + static_cast<std::size_t>(std::countr_zero(d));
    }
    return n_;
  }

  /// Calls f(i) for each set bit in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        std::size_t b = static_cast<std::size_t>(std::countr_zero(w));
        f(i * 64 + b);
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const Bits& a, const Bits& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
    for (auto w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace rgalg
