#pragma once

#include <cstdint>
#include <utility>

namespace lastzero {

// Seed for the counter-based uniform source. Identical (seed, stream_id)
// pairs reproduce the same draw sequence on every run and platform; distinct
// stream_ids select statistically independent substreams.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

// Philox2x64-10 (Salmon et al., Random123 constants). The generator is a
// pure function of (key, counter): draw i of substream s is word i of the
// keyed permutation of the 128-bit counter (i/2, s). This makes parallel
// generation trivially reproducible: any partition of the index space
// produces the same values.
//
// The 64-bit key is derived from (seed, stream_id) by SplitMix64 mixing, so
// each (seed, stream_id) pair keys its own counter space.
class PhiloxStream {
 public:
  explicit PhiloxStream(RngSeed s)
      : key_(detail::splitmix64(detail::splitmix64(s.seed) ^
                                (0xD6E8FEB86659FD93ULL * (s.stream_id + 1)))) {}

  std::pair<std::uint64_t, std::uint64_t> block(std::uint64_t c0,
                                                std::uint64_t c1) const {
    std::uint64_t x0 = c0, x1 = c1, k = key_;
    for (int round = 0; round < 10; ++round) {
      const unsigned __int128 prod =
          static_cast<unsigned __int128>(0xD2B74407B1CE6E93ULL) * x0;
      const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 64);
      const std::uint64_t lo = static_cast<std::uint64_t>(prod);
      x0 = hi ^ k ^ x1;
      x1 = lo;
      k += 0x9E3779B97F4A7C15ULL;
    }
    return {x0, x1};
  }

  // index-th 64-bit word of substream `sub`.
  std::uint64_t word(std::uint64_t sub, std::uint64_t index) const {
    const auto [a, b] = block(index >> 1, sub);
    return (index & 1) ? b : a;
  }

  // Uniform on the open interval (0,1): 53-bit mantissa, half-ulp centered
  // so 0 and 1 are never produced.
  double uniform(std::uint64_t sub, std::uint64_t index) const {
    return (static_cast<double>(word(sub, index) >> 11) + 0.5) * 0x1p-53;
  }

 private:
  std::uint64_t key_;
};

// Inverse of the standard normal CDF, Wichura's AS241 (PPND16), accurate to
// about 1e-16 relative over (0,1). Used for Gaussian increments so each
// normal consumes exactly one uniform (keeps the draw indexing fixed).
double normal_inverse_cdf(double p);

}  // namespace lastzero
