#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace chronosim {

// Reproducible random stream with cheap substream splitting. Substream
// (seed, index) is a pure function of its arguments, so parallel ensembles
// give identical results regardless of thread scheduling. Uniform doubles are
// produced directly from raw engine output rather than through
// std::uniform_real_distribution, whose output the standard does not pin
// down across implementations.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(mix(mix(seed) ^ kStreamSalt)) {}

    static RandomStream split(std::uint64_t seed, std::uint64_t index) {
        const std::uint64_t base = mix(seed);
        return RandomStream(mix(base ^ mix(index + kIndexSalt)));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Exponential waiting time with the given rate, by inverse transform.
    double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

    // Standard normal via Box-Muller; pairs are cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

  private:
    static constexpr std::uint64_t kStreamSalt = 0x9e3779b97f4a7c15ull;
    static constexpr std::uint64_t kIndexSalt = 0xbf58476d1ce4e5b9ull;

    // SplitMix64 finalizer; scrambles correlated seeds apart.
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace chronosim
