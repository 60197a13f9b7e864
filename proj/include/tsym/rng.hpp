#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace tsym {

/// Seeded generator with a fixed algorithm: std::mt19937_64 (whose output
/// sequence is fixed by the C++ standard), with integers in a range drawn by
/// rejection sampling on the raw 64-bit output rather than through a
/// std::uniform_int_distribution, whose algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Stream derived from (seed, tag) for independent per-item draws.
  static Rng derived(std::uint64_t seed, std::uint64_t tag) {
    return Rng(seed ^ (tag * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL));
  }

  std::uint64_t next() { return eng_(); }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
    std::uint64_t u;
    do {
      u = eng_();
    } while (u > limit);
    return lo + static_cast<long>(u % span);
  }

  bool coin(int num = 1, int den = 2) { return uniform(0, den - 1) < num; }

  /// `count` distinct integers in [lo, hi], in draw order.
  std::vector<long> distinct(int count, long lo, long hi) {
    if (hi - lo + 1 < count) throw std::invalid_argument("range too small for distinct draw");
    std::vector<long> out;
    while (static_cast<int>(out.size()) < count) {
      long v = uniform(lo, hi);
      bool dup = false;
      for (long o : out) dup = dup || o == v;
      if (!dup) out.push_back(v);
    }
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace tsym
