#pragma once

#include <cstdint>
#include <random>

#include "znz/error.hpp"

namespace znz {

// Deterministic random source.  mt19937_64 is bit-exact across
// platforms and the rejection sampler below avoids the
// implementation-defined std::uniform_int_distribution, so a seed
// reproduces the same stream everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform draw from [lo, hi], endpoints included.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw UsageError("uniform: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    bool coin() { return (next() & 1) != 0; }

    // splitmix64 finalizer; used to derive independent sub-seeds from
    // (seed, index) pairs.
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace znz
