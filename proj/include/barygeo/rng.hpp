#pragma once

#include <cstdint>

#include "barygeo/scalar.hpp"

namespace barygeo {

// splitmix64: tiny, fully specified PRNG. We avoid <random> distributions
// on purpose — their sequences are implementation-defined and the report
// determinism contract is byte-level.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~0ull - (~0ull % n);
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    // Integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Nonzero small rational with numerator in [-max_num, max_num] and
    // denominator in [1, max_den].
    Rat rational(long max_num, long max_den) {
        long num = 0;
        while (num == 0) num = range(-max_num, max_num);
        long den = range(1, max_den);
        Rat q(num, den);
        q.canonicalize();
        return q;
    }

    // Derive an independent stream for trial `index` of a seeded run.
    static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mix(seed ^ (0xa0761d6478bd642full * (index + 1)));
        mix.next();
        return mix;
    }

private:
    std::uint64_t state_;
};

}  // namespace barygeo
