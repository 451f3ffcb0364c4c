#pragma once

#include <cmath>
#include <cstdint>

namespace wgof {

namespace detail {

// Stafford variant 13 of the 64-bit finalizer used by SplitMix64.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream_id) {
  std::uint64_t h = mix64(seed + kGolden);
  h ^= mix64(stream_id + 0xD1B54A32D192ED03ULL);
  return mix64(h + kGolden);
}

}  // namespace detail

/// Counter-based pseudo-random stream.
///
/// Output i is mix64(key + i * golden), i.e. SplitMix64 keyed by a hash of
/// (seed, stream_id). Identical (seed, stream_id) pairs always produce the
/// identical sequence, streams carry no shared state, and a stream can be
/// recreated at any point by any worker, which is what the parallel
/// bootstrap and the power-study harness rely on.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : key_(detail::derive_key(seed, stream_id)) {}

  std::uint64_t next_u64() {
    counter_ += detail::kGolden;
    return detail::mix64(key_ + counter_);
  }

  /// Uniform draw strictly inside (0, 1), safe as a log() argument.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via the Marsaglia polar method; the spare value is
  /// cached as part of the stream state.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  /// Independent child stream; deterministic in (this stream's key, id).
  RngStream substream(std::uint64_t id) const { return RngStream(key_, id); }

  /// A 64-bit seed derived from (this stream's key, id), for handing to
  /// components that take a seed rather than a stream.
  std::uint64_t derive_seed(std::uint64_t id) const {
    return detail::derive_key(key_, id);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace wgof
