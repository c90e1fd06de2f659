#pragma once

#include <cstdint>
#include <limits>

namespace polydecomp {

/// Counter-based generator: the k-th output of stream (seed, stream) is a
/// fixed hash of (seed, stream, k), so any sample range can be regenerated
/// without replaying earlier draws. The mixing function is the SplitMix64
/// finalizer.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix(seed ^ mix(stream + kStreamSalt))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(key_ + (++counter_) * kGolden); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  std::uint64_t counter() const { return counter_; }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kStreamSalt = 0x632BE59BD9B4E019ULL;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace polydecomp
