#pragma once

#include <cstdint>

namespace slicelab {

/// SplitMix64. With seed 1234567 the stream starts 6457827717110365317,
/// 3203168211198807973, 9817491932198370423, 4593380528125082431.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// lo + next() % (hi - lo + 1).
  long uniform_int(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

 private:
  std::uint64_t state_;
};

/// Stream seed for (base seed, a, b), e.g. (trial index, retry attempt).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  SplitMix64 g(seed ^ (0xD1B54A32D192ED03ULL * (a + 1)));
  g.next();
  SplitMix64 h(g.next() ^ (0x8CB92BA72F3D8DD7ULL * (b + 1)));
  return h.next();
}

}  // namespace slicelab
