#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "jumpcp/common.hpp"

namespace jumpcp {

// Finite grid approximating the tail-parameter domain (-inf, -eps] u [eps, inf).
// Values are kept sorted ascending; duplicates are rejected.
class ZGrid {
public:
    ZGrid(double eps, std::vector<double> values) : eps_(eps), values_(std::move(values)) {
        validate();
    }

    // Grid with eps inferred as the smallest |z|. eps_ is initialised before
    // the vector member is moved from.
    explicit ZGrid(std::vector<double> values)
        : eps_(min_abs(values)), values_(std::move(values)) {
        validate();
    }

    // Single-point grid for the local statistics at a fixed z0.
    static ZGrid single(double z0) { return ZGrid(std::vector<double>{z0}); }

    // The grid used in the pure-jump simulation studies: {0.1, 0.15, 0.25, 1, 2}.
    static ZGrid pure_jump_default() { return ZGrid(0.1, {0.1, 0.15, 0.25, 1.0, 2.0}); }

    // Grid in sqrt(delta_n) units, {2, 3.5, 5, 6.5, 8} * sqrt(delta_n), for data
    // with a Brownian component (jumps below ~sqrt(delta_n) drown in volatility).
    static ZGrid continuous_default(double delta_n) {
        double s = std::sqrt(delta_n);
        return ZGrid(2.0 * s, {2.0 * s, 3.5 * s, 5.0 * s, 6.5 * s, 8.0 * s});
    }

    double eps() const { return eps_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }

private:
    void validate() {
        if (eps_ <= 0.0) throw ConfigError("zgrid: eps must be positive");
        if (values_.empty()) throw ConfigError("zgrid: at least one tail value required");
        std::sort(values_.begin(), values_.end());
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (std::abs(values_[i]) < eps_ || values_[i] == 0.0)
                throw ConfigError("zgrid: |z| >= eps > 0 required for every grid value");
            if (i > 0 && values_[i] == values_[i - 1])
                throw ConfigError("zgrid: duplicate tail value");
        }
    }

    static double min_abs(const std::vector<double>& v) {
        if (v.empty()) throw ConfigError("zgrid: at least one tail value required");
        double m = std::abs(v.front());
        for (double x : v) m = std::min(m, std::abs(x));
        return m > 0.0 ? m : -1.0;
    }

    double eps_;
    std::vector<double> values_;
};

} // namespace jumpcp
