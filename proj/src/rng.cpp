#include "holreg/rng.hpp"

namespace holreg {

Rational small_rational(SplitMix64& rng, long num_range, long den_range) {
    long num = static_cast<long>(rng.below(static_cast<std::uint64_t>(2 * num_range + 1))) - num_range;
    long den = static_cast<long>(rng.below(static_cast<std::uint64_t>(den_range))) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational small_rational_nonzero(SplitMix64& rng, long num_range, long den_range) {
    for (;;) {
        Rational q = small_rational(rng, num_range, den_range);
        if (q != 0) return q;
    }
}

GaussRational small_gauss(SplitMix64& rng, long num_range, long den_range) {
    Rational re = small_rational(rng, num_range, den_range);
    Rational im = small_rational(rng, num_range, den_range);
    return GaussRational(std::move(re), std::move(im));
}

}  // namespace holreg
