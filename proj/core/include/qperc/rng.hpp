#ifndef QPERC_RNG_HPP
#define QPERC_RNG_HPP

#include <cstdint>

namespace qperc {

// All randomness in qperc flows from a single master seed.  Independent
// streams are derived as
//
//   state0 = mix(mix(mix(master) ^ tag) ^ index)
//
// where mix is the splitmix64 finalizer.  (master, tag, index) therefore
// identifies a stream regardless of thread scheduling, which is what makes
// reruns byte-identical.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256** deterministic random stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : state_) w = splitmix64(sm);
  }

  /// Derive an independent stream from (master seed, stream tag, index).
  static Rng stream(std::uint64_t master, std::uint64_t tag, std::uint64_t index) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s) ^ tag;
    std::uint64_t b = splitmix64(a) ^ index;
    return Rng(splitmix64(b));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  /// Unbiased integer in [0, bound) via Lemire's method; bound must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  template <typename T>
  void shuffle(T* data, std::size_t n) {
    for (std::size_t i = n; i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_below(i));
      T tmp = data[i - 1];
      data[i - 1] = data[j];
      data[j] = tmp;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t state_[4];
};

// Stream tags, one per independent consumer of randomness.
namespace rng_tag {
inline constexpr std::uint64_t kGenerate = 1;
inline constexpr std::uint64_t kSwap = 2;
inline constexpr std::uint64_t kPercolate = 3;
inline constexpr std::uint64_t kSources = 4;
inline constexpr std::uint64_t kBootstrap = 5;
}  // namespace rng_tag

}  // namespace qperc

#endif
