#pragma once

#include <optional>
#include <vector>

#include "jumpcp/increments.hpp"
#include "jumpcp/zgrid.hpp"

namespace jumpcp {

// An increment falls in I(z) when it is >= z (z > 0) or <= z (z < 0).
inline bool in_tail(double increment, double z) {
    return z > 0.0 ? increment >= z : increment <= z;
}

// Per-z prefix sums of (optionally multiplier-weighted) jump indicators.
// column(k)[j] = sum_{i <= j} w_i 1{incr_i in I(z_k)}, so every U_n or
// bootstrap partial sum is an O(1) lookup and the sup statistics can be
// evaluated by a single sweep. Immutable after construction.
class PrefixStats {
public:
    PrefixStats(const IncrementGrid& grid, ZGrid zgrid,
                const std::optional<std::vector<double>>& weights = {});

    const ZGrid& zgrid() const { return zgrid_; }
    std::size_t n() const { return n_; }
    double k_n() const { return k_n_; }
    bool weighted() const { return weighted_; }

    // Prefix column for tail value z_k; length n + 1 with [0] = 0.
    const std::vector<double>& column(std::size_t k) const { return columns_[k]; }

    // Prefix sums of the weights themselves; length n + 1.
    const std::vector<double>& weight_prefix() const { return weight_prefix_; }

    // eta_n(z_k) = n^{-1} sum_i 1{incr_i in I(z_k)} (all-ones construction only).
    double eta(std::size_t k) const;

    // Raw indicator count for z_k over the whole sample.
    double total_count(std::size_t k) const { return columns_[k].back(); }

private:
    ZGrid zgrid_;
    std::size_t n_;
    double k_n_;
    bool weighted_;
    std::vector<std::vector<double>> columns_;
    std::vector<double> weight_prefix_;
};

} // namespace jumpcp
