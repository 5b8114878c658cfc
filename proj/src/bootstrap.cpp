#include "jumpcp/bootstrap.hpp"

#include <algorithm>
#include <cmath>

#include "jumpcp/parallel.hpp"
#include "jumpcp/sup_engine.hpp"

namespace jumpcp {

double hat_g_n(const IncrementGrid& grid, std::span<const double> xi, double theta, double z) {
    std::size_t n = grid.n();
    if (xi.size() != n) throw ConfigError("hat_g_n: multiplier vector length must equal n");
    std::size_t m = floor_index(theta, n);
    double count = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        if (in_tail(grid.increments[j], z)) count += 1.0;
    // n-scaled form n * WP - count * WS of sum xi_j (1{.} - eta): keeps the
    // unit-multiplier centering identity exact at theta = 1.
    double wp = 0.0, ws = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        ws += xi[j];
        if (in_tail(grid.increments[j], z)) wp += xi[j];
    }
    double nd = static_cast<double>(n);
    return (nd * wp - count * ws) / (nd * std::sqrt(grid.k_n()));
}

double hat_h_n(const IncrementGrid& grid, std::span<const double> xi, double kappa, double theta,
               double z) {
    if (kappa > theta) throw ConfigError("hat_h_n: kappa <= theta required");
    if (kappa < 0.0 || theta > 1.0) throw ConfigError("hat_h_n: (kappa, theta) outside C");
    if (theta == 0.0) return 0.0; // 0/0 := 1 cancels the two identical terms
    return hat_g_n(grid, xi, kappa, z) - (kappa / theta) * hat_g_n(grid, xi, theta, z);
}

BootstrapEngine::BootstrapEngine(const IncrementGrid& grid, ZGrid zgrid)
    : zgrid_(std::move(zgrid)), n_(grid.n()), k_n_(grid.k_n()) {
    indicator_.assign(zgrid_.size(), std::vector<std::uint8_t>(n_, 0));
    total_count_.assign(zgrid_.size(), 0.0);
    for (std::size_t k = 0; k < zgrid_.size(); ++k) {
        double z = zgrid_[k];
        for (std::size_t j = 0; j < n_; ++j) {
            if (in_tail(grid.increments[j], z)) {
                indicator_[k][j] = 1;
                total_count_[k] += 1.0;
            }
        }
    }
}

double BootstrapEngine::hat_h_sup_at(std::span<const double> xi, std::size_t m) const {
    if (xi.size() != n_) throw ConfigError("hat_h_sup: multiplier vector length must equal n");
    m = std::min(m, n_);
    if (m == 0) return 0.0;
    double nd = static_cast<double>(n_);

    // Weight prefix sums, shared across z columns.
    std::vector<double> weight_prefix(m + 1, 0.0);
    for (std::size_t j = 1; j <= m; ++j) weight_prefix[j] = weight_prefix[j - 1] + xi[j - 1];

    // Per coordinate t the engine consumes n * (WP_z[t] - eta_z * WS[t])
    // = n * WP_z[t] - count_z * WS[t]; the integer scaling keeps Rademacher
    // sums exactly representable so hull and brute force agree bit for bit.
    std::vector<double> at(m + 1), left(m + 1);
    std::vector<double> best;
    for (std::size_t k = 0; k < zgrid_.size(); ++k) {
        const auto& ind = indicator_[k];
        double cz = total_count_[k];
        double wp = 0.0;
        at[0] = 0.0;
        left[0] = 0.0;
        for (std::size_t t = 1; t <= m; ++t) {
            if (ind[t - 1]) wp += xi[t - 1];
            at[t] = nd * wp - cz * weight_prefix[t];
            left[t] = at[t - 1];
        }
        combine_max(best, sup_curve_pairs(at, left, m));
    }
    return best[m] / (nd * std::sqrt(k_n_));
}

double BootstrapEngine::hat_h_sup(std::span<const double> xi, double theta_hat) const {
    if (!(theta_hat >= 0.0 && theta_hat <= 1.0))
        throw ConfigError("hat_h_sup: theta_hat in [0, 1] required");
    return hat_h_sup_at(xi, floor_index(theta_hat, n_));
}

double hat_h_sup(const IncrementGrid& grid, const ZGrid& zgrid, std::span<const double> xi,
                 double theta_hat) {
    return BootstrapEngine(grid, zgrid).hat_h_sup(xi, theta_hat);
}

double bootstrap_quantile(std::vector<double> draws, double level) {
    if (draws.empty()) throw ConfigError("bootstrap_quantile: no draws");
    if (!(level > 0.0 && level <= 1.0))
        throw ConfigError("bootstrap_quantile: level in (0, 1] required");
    std::sort(draws.begin(), draws.end());
    // ceil(B * level)-th order statistic; the slack absorbs binary-decimal
    // artifacts in levels like 0.95.
    double raw = std::ceil(static_cast<double>(draws.size()) * level - 1e-9);
    std::size_t rank = static_cast<std::size_t>(std::max(raw, 1.0));
    rank = std::min(rank, draws.size());
    return draws[rank - 1];
}

std::vector<double> bootstrap_sup_draws(const BootstrapEngine& engine, double theta_hat,
                                        std::size_t B, const MultiplierKind& multiplier,
                                        std::uint64_t seed, unsigned threads) {
    if (B == 0) throw ConfigError("bootstrap: B >= 1 replications required");
    std::size_t m = floor_index(theta_hat, engine.n());
    std::vector<double> draws(B);
    parallel_for(B, threads, [&](std::size_t b) {
        SplitRng rng(seed, StreamPurpose::multiplier, b);
        std::vector<double> xi(engine.n());
        multiplier.fill(rng, xi);
        draws[b] = engine.hat_h_sup_at(xi, m);
    });
    return draws;
}

double threshold_lambda(const BootstrapEngine& engine, double theta_pre,
                        const ThresholdConfig& cfg) {
    if (!(cfg.r > 0.0 && cfg.r <= 1.0)) throw ConfigError("threshold: r in (0, 1] required");
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
        throw ConfigError("threshold: alpha in (0, 1) required");
    auto draws = bootstrap_sup_draws(engine, theta_pre, cfg.B, cfg.multiplier, cfg.seed,
                                     cfg.threads);
    if (cfg.r != 1.0)
        for (double& d : draws) d = std::pow(d, cfg.r);
    return bootstrap_quantile(std::move(draws), 1.0 - cfg.alpha);
}

double threshold_lambda(const IncrementGrid& grid, const ZGrid& zgrid, double theta_pre,
                        const ThresholdConfig& cfg) {
    return threshold_lambda(BootstrapEngine(grid, zgrid), theta_pre, cfg);
}

} // namespace jumpcp
