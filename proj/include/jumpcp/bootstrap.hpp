#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "jumpcp/increments.hpp"
#include "jumpcp/prefix_stats.hpp"
#include "jumpcp/rng.hpp"
#include "jumpcp/zgrid.hpp"

namespace jumpcp {

// Law of the bootstrap multipliers: i.i.d., mean 0, variance 1. Rademacher
// (the default) and standard normal are built in; bounded_custom lets tests
// plug in any sampler honouring the moment contract.
struct MultiplierKind {
    enum class Law { rademacher, standard_normal, bounded_custom };

    Law law = Law::rademacher;
    std::function<double(SplitRng&)> custom;
    double bound = 1.0;

    static MultiplierKind rademacher() { return {}; }
    static MultiplierKind standard_normal() {
        MultiplierKind m;
        m.law = Law::standard_normal;
        return m;
    }
    static MultiplierKind bounded_custom(std::function<double(SplitRng&)> sampler, double bound) {
        MultiplierKind m;
        m.law = Law::bounded_custom;
        m.custom = std::move(sampler);
        m.bound = bound;
        return m;
    }

    void fill(SplitRng& rng, std::span<double> out) const {
        switch (law) {
            case Law::rademacher:
                for (double& x : out) x = rng.rademacher();
                break;
            case Law::standard_normal:
                for (double& x : out) x = rng.gaussian();
                break;
            case Law::bounded_custom:
                for (double& x : out) x = custom(rng);
                break;
        }
    }
};

struct ThresholdConfig {
    double alpha = 0.1;  // confidence level of the threshold quantile
    double r = 0.01;     // power applied to the bootstrap sups, r in (0, 1]
    std::size_t B = 200; // bootstrap replications
    MultiplierKind multiplier = {};
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

// Multiplier bootstrap version of the sequential empirical tail integral,
//   hat G_n(theta, z) = k_n^{-1/2} sum_{j <= floor(n theta)} xi_j
//                       { 1{incr_j in I(z)} - eta_n(z) }.
double hat_g_n(const IncrementGrid& grid, std::span<const double> xi, double theta, double z);

// hat H_n(kappa, theta, z) = hat G_n(kappa, z) - (kappa/theta) hat G_n(theta, z).
double hat_h_n(const IncrementGrid& grid, std::span<const double> xi, double kappa, double theta,
               double z);

// Precomputed indicator columns for repeated bootstrap sup evaluations over a
// fixed data set. Queries are read-only and safe to run concurrently.
class BootstrapEngine {
public:
    BootstrapEngine(const IncrementGrid& grid, ZGrid zgrid);

    // hat H_n^{(eps)}(theta) = sup_z sup_{kappa <= theta' <= theta} |hat H_n|
    // for one multiplier vector, evaluated on the exact attainment set.
    double hat_h_sup(std::span<const double> xi, double theta_hat) const;
    double hat_h_sup_at(std::span<const double> xi, std::size_t m) const;

    std::size_t n() const { return n_; }
    double k_n() const { return k_n_; }
    const ZGrid& zgrid() const { return zgrid_; }

private:
    ZGrid zgrid_;
    std::size_t n_;
    double k_n_;
    std::vector<std::vector<std::uint8_t>> indicator_; // [z][j], j = 1..n
    std::vector<double> total_count_;                  // per z, as double
};

// Convenience wrapper building a one-shot engine.
double hat_h_sup(const IncrementGrid& grid, const ZGrid& zgrid, std::span<const double> xi,
                 double theta_hat);

// Order-statistic pseudoinverse of the empirical cdf: the ceil(B * level)-th
// smallest draw, level in (0, 1].
double bootstrap_quantile(std::vector<double> draws, double level);

// Data-driven threshold: the (1 - alpha) bootstrap quantile of
// (hat H_n^{(eps)}(theta_pre))^r over B independent multiplier vectors.
// Deterministic given cfg.seed, for any thread count.
double threshold_lambda(const IncrementGrid& grid, const ZGrid& zgrid, double theta_pre,
                        const ThresholdConfig& cfg);
double threshold_lambda(const BootstrapEngine& engine, double theta_pre,
                        const ThresholdConfig& cfg);

// B bootstrap draws of hat H_n^{(eps)}(theta_hat); the building block shared
// by the threshold and the tests. Draw b uses the multiplier stream
// (seed, multiplier, b).
std::vector<double> bootstrap_sup_draws(const BootstrapEngine& engine, double theta_hat,
                                        std::size_t B, const MultiplierKind& multiplier,
                                        std::uint64_t seed, unsigned threads = 1);

} // namespace jumpcp
