#ifndef WULFF_RNG_HPP
#define WULFF_RNG_HPP

#include <cstdint>

namespace wulff {

// splitmix64. Chosen over std::uniform_real_distribution because the output
// stream and the double mapping below are fully pinned, so identical seeds
// give identical samples on every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

 private:
  std::uint64_t state_;
};

// Per-sample seed derivation: hash(seed, sample_id). Record order in outputs
// is by sample_id, so concurrent runs reproduce the serial stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t sample_id) {
  SplitMix64 mix(seed ^ (0x2545f4914f6cdd1dULL * (sample_id + 1)));
  return mix.next_u64();
}

}  // namespace wulff

#endif
