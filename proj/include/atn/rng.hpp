#pragma once

#include <cstdint>

namespace atn {

// 64-bit linear congruential generator with Knuth's MMIX constants:
//
//   state <- state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
//
// The constants and the draw order are part of the output contract: any
// implementation reproducing this stream reproduces GEOMETRIC-mode
// placements bit for bit.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  // Uniform in [0, 1), 53 significant bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace atn
