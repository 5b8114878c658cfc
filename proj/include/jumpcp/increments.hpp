#pragma once

#include <cstdint>
#include <vector>

#include "jumpcp/common.hpp"

namespace jumpcp {

// A discretely observed sample path X_0, X_{delta_n}, ..., X_{n delta_n}.
struct SamplePath {
    std::vector<double> values; // length n + 1
    double delta_n = 0.0;
    std::uint64_t seed = 0;        // provenance
    std::uint64_t config_hash = 0; // provenance

    std::size_t n() const { return values.empty() ? 0 : values.size() - 1; }
};

// First differences of a sample path together with the observation scheme.
// k_n = n * delta_n is the covered time horizon and the natural scaling of
// every statistic built from the increments.
struct IncrementGrid {
    std::vector<double> increments; // length n
    double delta_n = 0.0;

    IncrementGrid() = default;
    IncrementGrid(std::vector<double> incr, double delta)
        : increments(std::move(incr)), delta_n(delta) {
        if (delta_n <= 0.0) throw ConfigError("increment grid: delta_n must be positive");
        if (increments.empty()) throw ConfigError("increment grid: empty");
    }

    static IncrementGrid from_path(const SamplePath& path) {
        if (path.values.size() < 2) throw DataError("increment grid: path needs >= 2 observations");
        std::vector<double> d(path.values.size() - 1);
        for (std::size_t i = 1; i < path.values.size(); ++i)
            d[i - 1] = path.values[i] - path.values[i - 1];
        return IncrementGrid(std::move(d), path.delta_n);
    }

    std::size_t n() const { return increments.size(); }
    double k_n() const { return static_cast<double>(increments.size()) * delta_n; }
};

} // namespace jumpcp
