#pragma once

#include <cstdint>

namespace fpkit {

/// splitmix64 (Steele, Lea, Flood 2014). All randomness in the library flows
/// from one 64-bit seed through this generator so that every report is
/// reproducible bit for bit across platforms. fork(k) derives the
/// deterministic substream for worker/purpose k without advancing the parent.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n >= 1. Multiply-shift, no rejection loop.
  uint64_t below(uint64_t n) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n)) >> 64);
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<uint64_t>(n))); }

  SplitMix64 fork(uint64_t stream) const {
    SplitMix64 child(state_ ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
    child.next();
    return child;
  }

 private:
  uint64_t state_;
};

}  // namespace fpkit
