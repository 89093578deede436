// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "steklov/scalar.hpp"

namespace steklov {

// splitmix64: deterministic sweeps reproduce across platforms for a fixed seed.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1) with 53-bit resolution
    Scalar uniform() { return Scalar(next() >> 11) / Scalar(9007199254740992.0); }

    Scalar uniform(const Scalar& lo, const Scalar& hi) { return lo + (hi - lo) * uniform(); }

  private:
    std::uint64_t state_;
};

}  // namespace steklov
