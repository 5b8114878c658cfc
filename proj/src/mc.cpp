#include "jumpcp/mc.hpp"

#include <chrono>
#include <cmath>

#include "jumpcp/changepoint.hpp"
#include "jumpcp/hypothesis.hpp"
#include "jumpcp/parallel.hpp"

namespace jumpcp {

double model_theta0(const TailKernel& kernel) {
    return std::visit(
        [](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, AbruptKernel>) {
                return k.theta0;
            } else if constexpr (std::is_same_v<K, StableKernel>) {
                return k.breakpoints.empty() ? 1.0 : k.breakpoints.front();
            } else if constexpr (std::is_same_v<K, SimKernel>) {
                return k.amplitude == 0.0 ? 1.0 : k.theta0;
            } else {
                return 1.0;
            }
        },
        kernel);
}

double calibrate_amplitude(double target_d1, double theta0, double smoothness,
                           const ZGrid& zgrid, double tol) {
    if (!(target_d1 > 0.0)) throw ConfigError("calibrate: target must be positive");
    if (!(theta0 > 0.0 && theta0 < 1.0)) throw ConfigError("calibrate: theta0 in (0, 1)");
    auto d1 = [&](double a) {
        TailKernel k = SimKernel{theta0, a, smoothness};
        return sup_variation(k, 1.0, zgrid);
    };
    double hi = 1.0;
    while (d1(hi) < target_d1) {
        hi *= 2.0;
        if (hi > 1e12) throw ConfigError("calibrate: target unreachable");
    }
    double lo = 0.0;
    while (hi - lo > tol * std::max(1.0, hi)) {
        double mid = 0.5 * (lo + hi);
        if (d1(mid) < target_d1)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

double binomial_se(double p, std::size_t r) {
    return r == 0 ? 0.0 : std::sqrt(p * (1.0 - p) / static_cast<double>(r));
}

} // namespace

McReport run_mc(const McConfig& cfg) {
    if (cfg.runs < 1) throw ConfigError("mc: runs >= 1 required");
    auto t0 = std::chrono::steady_clock::now();

    McReport report;
    report.label = cfg.label;
    report.k_n = static_cast<double>(cfg.n) * cfg.delta_n;
    report.true_theta0 = model_theta0(cfg.kernel);
    report.true_d1 = sup_variation(cfg.kernel, 1.0, cfg.zgrid);
    report.records.assign(cfg.runs, McRunRecord{});

    parallel_for(cfg.runs, cfg.threads, [&](std::size_t i) {
        McRunRecord& rec = report.records[i];
        rec.run = i;
        try {
            PathConfig pc;
            pc.n = cfg.n;
            pc.delta_n = cfg.delta_n;
            pc.subsample_factor = cfg.subsample_factor;
            pc.kernel = cfg.kernel;
            pc.trunc_eps = cfg.trunc_eps;
            pc.seed = derive_stream(cfg.seed, StreamPurpose::mc_run, i);
            SamplePath path = simulate_path(pc);
            if (cfg.continuous) {
                pc.continuous = cfg.continuous_part;
                path = add_continuous(path, pc);
            }
            IncrementGrid grid = IncrementGrid::from_path(path);

            if (cfg.metric_rejection) {
                TestConfig tc;
                tc.alpha = cfg.alpha;
                tc.B = cfg.B;
                tc.multiplier = cfg.multiplier;
                tc.seed = derive_stream(pc.seed, StreamPurpose::test_stat, 0);
                rec.reject_global = test_global(grid, cfg.zgrid, tc).reject;
                rec.reject_local.resize(cfg.z0_list.size(), 0);
                for (std::size_t q = 0; q < cfg.z0_list.size(); ++q) {
                    tc.seed = derive_stream(pc.seed, StreamPurpose::test_stat, q + 1);
                    rec.reject_local[q] = test_local(grid, cfg.z0_list[q], tc).reject ? 1 : 0;
                }
            }
            if (cfg.metric_deviation) {
                AdaptiveConfig ac;
                ac.theta_pre = cfg.theta_pre;
                ac.alpha = cfg.alpha;
                ac.r = cfg.r;
                ac.B = cfg.B;
                ac.multiplier = cfg.multiplier;
                ac.seed = pc.seed;
                rec.theta_hat = adaptive_estimate(grid, cfg.zgrid, ac).theta_hat;
            }
        } catch (const std::exception& e) {
            rec.ok = false;
            rec.error = e.what();
        }
    });

    std::size_t ok = 0;
    std::size_t global_rejects = 0;
    std::vector<std::size_t> local_rejects(cfg.z0_list.size(), 0);
    double abs_dev = 0.0;
    for (const auto& rec : report.records) {
        if (!rec.ok) {
            ++report.runs_failed;
            continue;
        }
        ++ok;
        if (cfg.metric_rejection) {
            global_rejects += rec.reject_global ? 1 : 0;
            for (std::size_t q = 0; q < local_rejects.size(); ++q)
                local_rejects[q] += rec.reject_local.size() > q && rec.reject_local[q] ? 1 : 0;
        }
        if (cfg.metric_deviation) abs_dev += std::abs(rec.theta_hat - report.true_theta0);
    }
    report.runs_ok = ok;
    if (ok > 0) {
        double denom = static_cast<double>(ok);
        report.reject_rate_global = static_cast<double>(global_rejects) / denom;
        report.se_global = binomial_se(report.reject_rate_global, ok);
        for (std::size_t q = 0; q < local_rejects.size(); ++q) {
            double rate = static_cast<double>(local_rejects[q]) / denom;
            report.reject_rate_local.push_back(rate);
            report.se_local.push_back(binomial_se(rate, ok));
        }
        report.l1_deviation = abs_dev / denom;
    }
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace jumpcp
