#include "jumpcp/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "jumpcp/sup_engine.hpp"

namespace jumpcp {

namespace {

void require_all_ones(const PrefixStats& stats, const char* what) {
    if (stats.weighted())
        throw ConfigError(std::string(what) + ": all-ones prefix statistics required");
}

} // namespace

double u_n(const PrefixStats& stats, double theta, std::size_t k) {
    require_all_ones(stats, "u_n");
    std::size_t idx = floor_index(theta, stats.n());
    return stats.column(k)[idx] / stats.k_n();
}

double d_n(const PrefixStats& stats, double kappa, double theta, std::size_t k) {
    require_all_ones(stats, "d_n");
    if (kappa > theta) throw ConfigError("d_n: kappa <= theta required");
    if (kappa < 0.0 || theta > 1.0) throw ConfigError("d_n: (kappa, theta) outside C");
    if (theta == 0.0) return 0.0; // kappa = theta = 0, ratio 0/0 := 1
    return u_n(stats, kappa, k) - (kappa / theta) * u_n(stats, theta, k);
}

std::vector<double> sup_counts_curve(const PrefixStats& stats, std::size_t m) {
    require_all_ones(stats, "sup_counts_curve");
    m = std::min(m, stats.n());
    std::vector<double> acc;
    std::vector<double> left(m + 1);
    for (std::size_t k = 0; k < stats.zgrid().size(); ++k) {
        const auto& col = stats.column(k);
        left[0] = col[0];
        for (std::size_t t = 1; t <= m; ++t) left[t] = col[t - 1];
        combine_max(acc, sup_curve_pairs({col.data(), m + 1}, left, m));
    }
    return acc;
}

std::vector<double> sup_d_n(const PrefixStats& stats) {
    require_all_ones(stats, "sup_d_n");
    auto curve = sup_counts_curve(stats, stats.n());
    for (double& v : curve) v /= stats.k_n();
    return curve;
}

double w_stat(const PrefixStats& stats, double z0) {
    require_all_ones(stats, "w_stat");
    const auto& zs = stats.zgrid().values();
    auto it = std::find(zs.begin(), zs.end(), z0);
    if (it == zs.end()) throw ConfigError("w_stat: z0 is not a grid value of these statistics");
    std::size_t k = static_cast<std::size_t>(it - zs.begin());
    std::size_t n = stats.n();
    const auto& col = stats.column(k);
    std::vector<double> left(n + 1);
    left[0] = col[0];
    for (std::size_t t = 1; t <= n; ++t) left[t] = col[t - 1];
    auto curve = sup_curve_pairs(col, left, n);
    return curve[n] / std::sqrt(stats.k_n());
}

double gn_diagnostic(const PrefixStats& stats, const TailKernel& kernel, double theta,
                     std::size_t k) {
    require_all_ones(stats, "gn_diagnostic");
    double u = u_n(stats, theta, k);
    return std::sqrt(stats.k_n()) * (u - integrated_tail(kernel, theta, stats.zgrid()[k]));
}

double hn_sup_diagnostic(const PrefixStats& stats, const TailKernel& kernel, double theta) {
    require_all_ones(stats, "hn_sup_diagnostic");
    std::size_t n = stats.n();
    std::size_t m = floor_index(theta, n);
    double kn = stats.k_n();
    std::vector<double> acc;
    std::vector<double> at(m + 1), left(m + 1);
    for (std::size_t k = 0; k < stats.zgrid().size(); ++k) {
        const auto& col = stats.column(k);
        double z = stats.zgrid()[k];
        // Subtracting k_n * int_0^{t/n} g(y,z) dy per coordinate turns the
        // centered sup into the same piecewise-linear problem the engine solves.
        for (std::size_t t = 0; t <= m; ++t) {
            double centering = kn * integrated_tail(kernel, static_cast<double>(t) /
                                                                static_cast<double>(n), z);
            at[t] = col[t] - centering;
            left[t] = (t == 0 ? col[0] : col[t - 1]) - centering;
        }
        combine_max(acc, sup_curve_pairs(at, left, m));
    }
    return (m == 0 ? 0.0 : acc[m]) / std::sqrt(kn);
}

} // namespace jumpcp
