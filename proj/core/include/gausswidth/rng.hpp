#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace gw {

// Counter-based deterministic RNG: each (seed, stream) pair is an independent
// substream, so per-shell / per-task sampling is reproducible regardless of
// execution order.  Mixing is two splitmix64 finalizer rounds over
// (seed, stream, counter).
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + 0x9E3779B97F4A7C15ULL * (counter_++ + 1);
        z ^= stream_ * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on (0,1]; never returns 0 so log() is safe.
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // One standard normal draw via Box-Muller (sibling draw discarded;
    // determinism matters more here than throughput).
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

} // namespace gw
