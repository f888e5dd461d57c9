#pragma once

#include <cstdint>
#include <vector>

namespace abbrev {

// SplitMix64 generator. The algorithm is spelled out here instead of using
// <random> distributions because distribution output is implementation
// defined; this keeps every seeded run reproducible byte-for-byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, n) via rejection sampling. n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

  double real01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return real01() < p; }

  // Independent stream derived from the construction seed, not the current
  // state, so stream k is the same no matter how much the parent was used.
  Rng stream(std::uint64_t stream_id) const {
    Rng child(seed_ ^ (0xD1B54A32D192ED03ULL * (stream_id + 1)));
    child.next_u64();
    return child;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  // k distinct indices from [0, n), ascending.
  std::vector<int> sample_indices(int n, int k);

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace abbrev
