#pragma once

#include <cmath>
#include <cstdint>

namespace ricci {

/// SplitMix64, the fixed randomness contract of this project ("SplitMix64
/// v1"): a 64-bit state advanced by the golden-gamma increment and mixed
/// by the Stafford mix13 finalizer. Streams derived with split() are
/// reproducible across platforms; doubles carry 53 random bits.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    double log_uniform(double a, double b) {
        return std::exp(uniform(std::log(a), std::log(b)));
    }

    /// Independent substream k of a base seed.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t k) {
        SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ULL * (k + 1)));
        return SplitMix64(mixer.next());
    }

  private:
    std::uint64_t state_;
};

}  // namespace ricci
