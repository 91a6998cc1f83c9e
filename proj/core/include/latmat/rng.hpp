#pragma once

#include <cstdint>
#include <random>

#include "latmat/error.hpp"

namespace latmat {

// Deterministic random stream: mt19937_64 (whose output sequence is fixed
// by the standard) seeded from a splitmix64 mix of (seed, index), so
// distinct indices give independent streams and results are reproducible
// across platforms. The sampling helpers below avoid std distributions,
// whose outputs are implementation-defined.
class SeededStream {
public:
    SeededStream(std::uint64_t seed, std::uint64_t index = 0)
        : engine_(mix(seed, index)) {}

    std::uint64_t next() { return engine_(); }

    // uniform in [0, bound), bias-free by rejection
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) fail(Errc::UsageError, "empty sampling range");
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    // uniform in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) fail(Errc::UsageError, "empty sampling range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());   // full 64-bit range
        return lo + static_cast<std::int64_t>(below(span));
    }

    bool coin() { return (next() & 1) != 0; }

private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace latmat
