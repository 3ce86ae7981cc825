#pragma once

#include <cstdint>
#include <random>

namespace safe {

// Deterministic random stream. Only the raw 64-bit engine output is used;
// the conversions below are written out so that sequences do not depend on
// the standard library's distribution implementations.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi]. The upper bound is reachable only through rounding.
    double uniform(double lo, double hi)
    {
        double x = lo + (hi - lo) * uniform01();
        return x > hi ? hi : x;
    }

    // Uniform integer in [0, n), n > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % n;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    friend bool operator==(const Rng&, const Rng&) = default;

private:
    std::mt19937_64 engine_;
};

} // namespace safe
