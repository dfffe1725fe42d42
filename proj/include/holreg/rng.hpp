#pragma once

#include <cstdint>

#include "holreg/rational.hpp"

namespace holreg {

/// SplitMix64. Small, fully deterministic, portable across platforms; all
/// seeded sampling in the library goes through this.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// Rational with numerator in [-num_range, num_range] and denominator in
/// [1, den_range]. Small heights keep downstream exact arithmetic cheap.
Rational small_rational(SplitMix64& rng, long num_range = 9, long den_range = 4);

/// Nonzero variant of small_rational.
Rational small_rational_nonzero(SplitMix64& rng, long num_range = 9, long den_range = 4);

GaussRational small_gauss(SplitMix64& rng, long num_range = 9, long den_range = 4);

}  // namespace holreg
