#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace jumpcp {

// Exact evaluation of suprema of the form
//
//     sup_{0 <= kappa <= theta' <= t/n} | S(kappa) - (kappa/theta') S(theta') |
//
// where S is a step function with jumps at the grid points s/n. Because S is
// piecewise constant and kappa -> -c kappa, theta' -> kappa/theta' are
// monotone inside grid cells, the supremum over the continuum is attained on
// the finite candidate set pairing each grid coordinate with its one-sided
// values: at coordinate s both the value at[s] and the left limit left[s]
// are admissible, except that (kappa at, theta' left) is infeasible when the
// two coordinates coincide. Values are handled in raw (count-like) units;
// callers apply their own final scaling.
//
// Candidate values are computed as |a * t - s * b| / t. For integer-valued
// inputs (indicator counts, Rademacher-weighted sums scaled by n) all
// products stay below 2^53, so every candidate value is a correctly rounded
// rational and the hull-accelerated path reproduces brute-force enumeration
// bit for bit.

namespace detail {

inline double candidate_value(double s, double a, double t, double b) {
    return std::abs(a * t - s * b) / t;
}

// One monotone chain; orient +1 keeps the upper hull (maximises a - c s over
// the inserted points), orient -1 the lower hull (minimises it). Abscissae
// arrive in non-decreasing order, so insertion is amortised O(1).
class HullChain {
public:
    explicit HullChain(int orient) : orient_(orient) {}

    void reserve(std::size_t n) {
        xs_.reserve(n);
        ys_.reserve(n);
    }

    void push(double s, double v) {
        if (!xs_.empty() && xs_.back() == s) {
            if (static_cast<double>(orient_) * (v - ys_.back()) <= 0.0) return;
            xs_.pop_back();
            ys_.pop_back();
        }
        while (xs_.size() >= 2) {
            std::size_t i = xs_.size() - 2, j = xs_.size() - 1;
            double cross = (xs_[j] - xs_[i]) * (v - ys_[i]) - (ys_[j] - ys_[i]) * (s - xs_[i]);
            if (static_cast<double>(orient_) * cross >= 0.0) {
                xs_.pop_back();
                ys_.pop_back();
            } else {
                break;
            }
        }
        xs_.push_back(s);
        ys_.push_back(v);
    }

    // Candidate value at the vertex maximising the signed objective
    // (a t - s b) for the upper chain, (s b - a t) for the lower one. The
    // signed objective is concave along the chain, so a binary search over
    // edge gradients finds the peak.
    double query(double t, double b) const {
        std::size_t lo = 0, hi = xs_.size() - 1;
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            if (gain(mid, t, b) > 0.0)
                lo = mid + 1;
            else
                hi = mid;
        }
        return candidate_value(xs_[lo], ys_[lo], t, b);
    }

private:
    double gain(std::size_t k, double t, double b) const {
        double d = (ys_[k + 1] - ys_[k]) * t - b * (xs_[k + 1] - xs_[k]);
        return orient_ > 0 ? d : -d;
    }

    int orient_;
    std::vector<double> xs_;
    std::vector<double> ys_;
};

} // namespace detail

// Running-supremum curve over theta' coordinates 0..m for one value column.
// at[s] is the partial-sum value at coordinate s, left[s] its left limit
// (left[0] is ignored). Returns curve[0..m] with curve[0] = 0.
inline std::vector<double> sup_curve_pairs(std::span<const double> at,
                                           std::span<const double> left, std::size_t m) {
    std::vector<double> curve(m + 1, 0.0);
    if (m == 0) return curve;
    detail::HullChain upper(+1), lower(-1);
    upper.reserve(m + 2);
    lower.reserve(m + 2);
    upper.push(0.0, at[0]);
    lower.push(0.0, at[0]);
    double run = 0.0;
    for (std::size_t t = 1; t <= m; ++t) {
        double td = static_cast<double>(t);
        // Left-limit value first: queries against b = left[t] must not see the
        // point (t, at[t]), which is infeasible for a left-limit theta'.
        upper.push(td, left[t]);
        lower.push(td, left[t]);
        run = std::max(run, std::max(upper.query(td, left[t]), lower.query(td, left[t])));
        upper.push(td, at[t]);
        lower.push(td, at[t]);
        run = std::max(run, std::max(upper.query(td, at[t]), lower.query(td, at[t])));
        curve[t] = run;
    }
    return curve;
}

// Elementwise running max, used to fold per-z curves into the sup over the grid.
inline void combine_max(std::vector<double>& acc, const std::vector<double>& other) {
    if (acc.empty()) {
        acc = other;
        return;
    }
    for (std::size_t i = 0; i < acc.size() && i < other.size(); ++i)
        acc[i] = std::max(acc[i], other[i]);
}

} // namespace jumpcp
