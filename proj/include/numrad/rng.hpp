#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace numrad {

// SplitMix64, fixed here so any language can reproduce the streams from a
// seed (see the README for the constants).  Trial k of a fuzz run draws from
// an independent generator seeded with seed ^ k, which keeps parallel trial
// execution deterministic.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1) with 53 random bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // standard normal via Box-Muller; the second value of each pair is cached
    double gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    // standard complex normal: E|z|^2 = 1
    std::complex<double> complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re * 0.7071067811865475244, im * 0.7071067811865475244};
    }

  private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

} // namespace numrad
