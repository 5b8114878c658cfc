#pragma once

#include <cstdint>

#include "jumpcp/bootstrap.hpp"
#include "jumpcp/increments.hpp"
#include "jumpcp/zgrid.hpp"

namespace jumpcp {

struct ChangePointEstimate {
    double theta_hat = 1.0;   // final estimate, a multiple of 1/n
    double lambda_used = 0.0; // final-stage threshold
    double lambda_in = 0.0;   // initial threshold (stage 2)
    double theta_in = 1.0;    // intermediate estimate (stage 3)
    double theta_pre = 0.1;
    double alpha = 0.1;
    double r = 0.01;
    std::size_t B = 200;
    std::uint64_t seed = 0;
};

struct AdaptiveConfig {
    double theta_pre = 0.1; // preliminary estimate, in (0, 1)
    double alpha = 0.1;
    double r = 0.01;        // 0.01 for pure-jump data, 1 with a continuous part
    std::size_t B = 200;
    MultiplierKind multiplier = {};
    std::uint64_t seed = 0;
    unsigned threads = 1;
    // Stage 4 draws fresh multipliers by default; set to reuse the stage-2
    // streams instead.
    bool reuse_multipliers = false;
};

// Threshold-regularised change-point estimator
//   theta_hat(lambda) = n^{-1} sum_{j=1}^n 1{ sqrt(k_n) D_n^{(eps)}(j/n) <= lambda },
// the grid evaluation of int_0^1 1{sqrt(k_n) D_n^{(eps)}(theta) <= lambda} d theta.
double estimate_theta(const IncrementGrid& grid, const ZGrid& zgrid, double lambda);

// Same, reusing a precomputed raw-count sup curve (length n + 1).
double estimate_theta_from_counts(const std::vector<double>& counts_curve, double k_n,
                                  double lambda);

// Five-step adaptive procedure: bootstrap an initial threshold at theta_pre,
// estimate, re-bootstrap the threshold at the intermediate estimate, estimate
// again. Stage seeds derive from cfg.seed via the threshold_in/threshold_fi
// stream purposes.
ChangePointEstimate adaptive_estimate(const IncrementGrid& grid, const ZGrid& zgrid,
                                      const AdaptiveConfig& cfg);

} // namespace jumpcp
