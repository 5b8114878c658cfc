#pragma once

#include <cstdint>
#include <optional>

#include "jumpcp/increments.hpp"
#include "jumpcp/kernel.hpp"
#include "jumpcp/rng.hpp"

namespace jumpcp {

struct ContinuousPart {
    double drift = 1.0;      // b
    double volatility = 1.0; // sigma
};

struct PathConfig {
    std::size_t n = 10000;               // observations
    double delta_n = 0.005;              // sampling step
    std::size_t subsample_factor = 15;   // sub-increments per observation step
    TailKernel kernel = SimKernel{};
    std::optional<ContinuousPart> continuous = {};
    double trunc_eps = 1e-4;             // small-jump truncation level
    std::uint64_t seed = 0;

    double k_n() const { return static_cast<double>(n) * delta_n; }
    std::uint64_t hash() const;
};

// Simulates the pure-jump part: for j = 1..mn the sub-increment over
// delta_n / m draws a compound-Poisson approximation of the jump law with
// tail g(j/(mn), .) truncated at trunc_eps, jump sizes sampled by inverting
// the tail at a uniform level. Deterministic given (config, seed); each
// sub-increment owns the stream (seed, jumps, j).
SamplePath simulate_path(const PathConfig& config);

// Expected mass of the jumps dropped by the truncation, per sub-increment:
// (delta_n / m) * max_y int_0^eps z nu_y(dz). Evaluated on a coarse y sweep.
double truncation_bias_per_subincrement(const PathConfig& config);

// The continuous component b t + sigma W_t at the n + 1 grid times,
// from the stream family (seed, continuous, i). Fresh draws, independent of
// the jump streams.
std::vector<double> continuous_component(const PathConfig& config);

// Adds the continuous component to a pure-jump path.
SamplePath add_continuous(const SamplePath& path, const PathConfig& config);

// One increment of the 1/2-stable subordinator with constant tail
// sqrt(gamma / (pi z)) over a window of length dt, drawn via the closed-form
// construction scale / Z^2 with Z standard normal and scale = gamma dt^2 / 2
// (the scale that reproduces the prescribed tail; see the sampler tests).
double exact_halfstable_increment(double gamma, double dt, SplitRng& rng);

} // namespace jumpcp
