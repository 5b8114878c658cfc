#include "jumpcp/hypothesis.hpp"

#include <algorithm>
#include <cmath>

#include "jumpcp/estimator.hpp"

namespace jumpcp {

namespace {

TestReport run_test(const IncrementGrid& grid, const ZGrid& zgrid, const TestConfig& cfg,
                    std::string kind, double z0) {
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw ConfigError("test: alpha in (0, 1) required");
    if (cfg.B == 0) throw ConfigError("test: B >= 1 required");

    PrefixStats stats(grid, zgrid);
    auto counts = sup_counts_curve(stats, grid.n());
    double statistic = counts[grid.n()] / std::sqrt(grid.k_n());

    BootstrapEngine engine(grid, zgrid);
    std::uint64_t draw_seed = derive_stream(cfg.seed, StreamPurpose::test_stat);
    auto draws = bootstrap_sup_draws(engine, 1.0, cfg.B, cfg.multiplier, draw_seed, cfg.threads);

    TestReport report;
    report.kind = std::move(kind);
    report.statistic = statistic;
    report.alpha = cfg.alpha;
    report.B = cfg.B;
    report.z0 = z0;
    report.seed = cfg.seed;
    report.critical_value = bootstrap_quantile(draws, 1.0 - cfg.alpha);

    std::size_t ge = 0;
    double sum = 0.0, sum2 = 0.0, mx = 0.0;
    for (double d : draws) {
        if (d >= statistic) ++ge;
        sum += d;
        sum2 += d * d;
        mx = std::max(mx, d);
    }
    double bd = static_cast<double>(cfg.B);
    report.draws_mean = sum / bd;
    report.draws_sd = cfg.B > 1 ? std::sqrt(std::max(0.0, (sum2 - sum * sum / bd) / (bd - 1.0)))
                                : 0.0;
    report.draws_max = mx;
    report.p_value = (1.0 + static_cast<double>(ge)) / (bd + 1.0);
    // A statistic of exactly zero carries no evidence against constancy; the
    // quantile comparison alone would reject when every bootstrap draw is
    // zero as well (degenerate data with no qualifying increments).
    report.reject = statistic > 0.0 && statistic >= report.critical_value;
    return report;
}

} // namespace

TestReport test_global(const IncrementGrid& grid, const ZGrid& zgrid, const TestConfig& cfg) {
    return run_test(grid, zgrid, cfg, "global", 0.0);
}

TestReport test_local(const IncrementGrid& grid, double z0, const TestConfig& cfg) {
    if (z0 == 0.0) throw ConfigError("test_local: z0 must be nonzero");
    return run_test(grid, ZGrid::single(z0), cfg, "local", z0);
}

} // namespace jumpcp
