#pragma once

#include <cmath>
#include <cstdint>

namespace jumpcp {

// Purpose tags for deriving independent RNG streams from one root seed.
// Streams are keyed by (seed, purpose, index); any two distinct keys give
// statistically independent sequences. This is what makes parallel Monte
// Carlo replications bit-identical to sequential execution: each unit of
// work owns its stream, regardless of which thread runs it.
enum class StreamPurpose : std::uint64_t {
    jumps        = 0x6a756d70, // per sub-increment jump sampling
    continuous   = 0x636f6e74, // Brownian + drift component
    multiplier   = 0x6d756c74, // bootstrap multiplier vectors
    mc_run       = 0x6d637230, // per-replication seeds in MC studies
    threshold_in = 0x74687230, // adaptive procedure, initial threshold stage
    threshold_fi = 0x74687231, // adaptive procedure, final threshold stage
    test_stat    = 0x74737430, // hypothesis-test bootstrap draws
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Collapse (seed, purpose, index) into a single stream key.
inline std::uint64_t derive_stream(std::uint64_t seed, StreamPurpose purpose, std::uint64_t index = 0) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ static_cast<std::uint64_t>(purpose);
    std::uint64_t b = splitmix64(s);
    s = b ^ index;
    return splitmix64(s);
}

// Small counter-based generator (splitmix64 core). Hand-rolled rather than
// <random> distributions so that sequences are identical across standard
// libraries and platforms; reproducibility of every artifact depends on it.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t key) : state_(key) {}
    SplitRng(std::uint64_t seed, StreamPurpose purpose, std::uint64_t index = 0)
        : state_(derive_stream(seed, purpose, index)) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1]; used for inverse-tail levels which must be positive.
    double uniform_pos() { return 1.0 - uniform01(); }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Box-Muller; consumes two uniforms per call.
    double gaussian() {
        double u1 = uniform_pos();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double rademacher() { return (next_u64() & 1ull) ? 1.0 : -1.0; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Knuth's product method, chunked so the e^{-mean} factor never
    // underflows. Exact in distribution for any mean >= 0.
    std::uint64_t poisson(double mean) {
        std::uint64_t total = 0;
        while (mean > 60.0) {
            total += poisson_small(60.0);
            mean -= 60.0;
        }
        return total + poisson_small(mean);
    }

private:
    std::uint64_t poisson_small(double mean) {
        if (mean <= 0.0) return 0;
        const double limit = std::exp(-mean);
        double prod = 1.0;
        std::uint64_t k = 0;
        do {
            ++k;
            prod *= uniform01();
        } while (prod > limit);
        return k - 1;
    }

    std::uint64_t state_;
};

} // namespace jumpcp
