#include "jumpcp/changepoint.hpp"

#include <cmath>

#include "jumpcp/estimator.hpp"

namespace jumpcp {

double estimate_theta_from_counts(const std::vector<double>& counts_curve, double k_n,
                                  double lambda) {
    if (counts_curve.size() < 2) throw ConfigError("estimate_theta: empty sup curve");
    if (lambda < 0.0) throw ConfigError("estimate_theta: lambda >= 0 required");
    std::size_t n = counts_curve.size() - 1;
    double sqrt_kn = std::sqrt(k_n);
    std::size_t kept = 0;
    for (std::size_t j = 1; j <= n; ++j)
        if (counts_curve[j] / sqrt_kn <= lambda) ++kept;
    return static_cast<double>(kept) / static_cast<double>(n);
}

double estimate_theta(const IncrementGrid& grid, const ZGrid& zgrid, double lambda) {
    PrefixStats stats(grid, zgrid);
    auto counts = sup_counts_curve(stats, grid.n());
    return estimate_theta_from_counts(counts, grid.k_n(), lambda);
}

ChangePointEstimate adaptive_estimate(const IncrementGrid& grid, const ZGrid& zgrid,
                                      const AdaptiveConfig& cfg) {
    if (!(cfg.theta_pre > 0.0 && cfg.theta_pre < 1.0))
        throw ConfigError("adaptive_estimate: theta_pre in (0, 1) required");

    BootstrapEngine engine(grid, zgrid);
    PrefixStats stats(grid, zgrid);
    auto counts = sup_counts_curve(stats, grid.n());
    double k_n = grid.k_n();

    ThresholdConfig tc;
    tc.alpha = cfg.alpha;
    tc.r = cfg.r;
    tc.B = cfg.B;
    tc.multiplier = cfg.multiplier;
    tc.threads = cfg.threads;

    tc.seed = derive_stream(cfg.seed, StreamPurpose::threshold_in);
    double lambda_in = threshold_lambda(engine, cfg.theta_pre, tc);
    double theta_in = estimate_theta_from_counts(counts, k_n, lambda_in);

    tc.seed = cfg.reuse_multipliers ? tc.seed
                                    : derive_stream(cfg.seed, StreamPurpose::threshold_fi);
    double lambda_fi = threshold_lambda(engine, theta_in, tc);
    double theta_hat = estimate_theta_from_counts(counts, k_n, lambda_fi);

    ChangePointEstimate out;
    out.theta_hat = theta_hat;
    out.lambda_used = lambda_fi;
    out.lambda_in = lambda_in;
    out.theta_in = theta_in;
    out.theta_pre = cfg.theta_pre;
    out.alpha = cfg.alpha;
    out.r = cfg.r;
    out.B = cfg.B;
    out.seed = cfg.seed;
    return out;
}

} // namespace jumpcp
