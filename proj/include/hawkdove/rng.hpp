#ifndef HAWKDOVE_RNG_HPP
#define HAWKDOVE_RNG_HPP

#include <cstdint>

namespace hawkdove {

// SplitMix64: tiny, fast, platform-independent. Used everywhere so that runs
// are reproducible bit-for-bit regardless of the standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in {0,...,n-1}; n must be > 0
  std::uint64_t next_below(std::uint64_t n) {
    // rejection-free multiply-shift; bias < 2^-64, irrelevant here
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Counter-based substream derivation: results are independent of how work is
// split across threads.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 mix(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  mix.next_u64();
  return mix.next_u64();
}

}  // namespace hawkdove

#endif
