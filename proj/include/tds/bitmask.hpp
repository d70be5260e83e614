#pragma once
#include <bit>
#include <cstdint>
#include <vector>

namespace tds {

// Fixed-width dynamic bitset for coverage bookkeeping in the exact
// searches. Widths are a handful of words at desk scale.
struct Bitmask {
  std::vector<std::uint64_t> w;

  Bitmask() = default;
  explicit Bitmask(int nbits) : w((static_cast<size_t>(nbits) + 63) / 64, 0) {}

  void set(int i) { w[static_cast<size_t>(i) >> 6] |= 1ULL << (i & 63); }
  void clear(int i) { w[static_cast<size_t>(i) >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const {
    return (w[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1ULL;
  }

  bool none() const {
    for (std::uint64_t word : w)
      if (word) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (std::uint64_t word : w) c += std::popcount(word);
    return c;
  }

  Bitmask& operator|=(const Bitmask& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    return *this;
  }

  // this & ~o
  Bitmask and_not(const Bitmask& o) const {
    Bitmask r = *this;
    for (size_t i = 0; i < r.w.size(); ++i) r.w[i] &= ~o.w[i];
    return r;
  }

  int count_and(const Bitmask& o) const {
    int c = 0;
    for (size_t i = 0; i < w.size(); ++i) c += std::popcount(w[i] & o.w[i]);
    return c;
  }

  bool intersects(const Bitmask& o) const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }

  static Bitmask all(int nbits) {
    Bitmask m(nbits);
    for (int i = 0; i < nbits; ++i) m.set(i);
    return m;
  }

  bool operator==(const Bitmask& o) const = default;
};

}  // namespace tds
