#include <doctest.h>

#include <cmath>
#include <vector>

#include "jumpcp/changepoint.hpp"
#include "jumpcp/estimator.hpp"
#include "jumpcp/simulate.hpp"
#include "oracle.hpp"

using namespace jumpcp;

TEST_CASE("estimate_theta: trivial thresholds and grid values") {
    SplitRng rng(17, StreamPurpose::mc_run, 0);
    std::size_t n = 70;
    std::vector<double> incr(n);
    for (auto& x : incr) x = rng.gaussian();
    IncrementGrid grid(incr, 0.2);
    ZGrid zgrid(0.25, {0.25, 1.0});

    CHECK(estimate_theta(grid, zgrid, 1e18) == 1.0);

    IncrementGrid zeros(std::vector<double>(12, 0.0), 0.5);
    CHECK(estimate_theta(zeros, zgrid, 0.0) == 1.0);

    double theta = estimate_theta(grid, zgrid, 0.8);
    double scaled = theta * static_cast<double>(n);
    CHECK(scaled == doctest::Approx(std::round(scaled)).epsilon(1e-12)); // multiple of 1/n

    // Non-decreasing in lambda.
    double prev = 0.0;
    for (double lam : {0.0, 0.2, 0.5, 1.0, 2.0, 5.0}) {
        double cur = estimate_theta(grid, zgrid, lam);
        CHECK(cur >= prev);
        prev = cur;
    }

    // Brute-force agreement.
    for (double lam : {0.0, 0.37, 1.1, 3.0})
        CHECK(estimate_theta(grid, zgrid, lam) == oracle::estimate_theta(grid, zgrid, lam));
}

TEST_CASE("adaptive_estimate: deterministic and equal to the manual composition") {
    PathConfig pc;
    pc.n = 1200;
    pc.delta_n = 1.0 / 24.0; // k_n = 50
    pc.kernel = SimKernel{0.4, 60.0, 1.0};
    pc.seed = 2718;
    SamplePath path = simulate_path(pc);
    IncrementGrid grid = IncrementGrid::from_path(path);
    ZGrid zgrid = ZGrid::pure_jump_default();

    AdaptiveConfig cfg;
    cfg.theta_pre = 0.1;
    cfg.alpha = 0.1;
    cfg.r = 0.01;
    cfg.B = 60;
    cfg.seed = 31337;

    ChangePointEstimate a = adaptive_estimate(grid, zgrid, cfg);
    ChangePointEstimate b = adaptive_estimate(grid, zgrid, cfg);
    CHECK(a.theta_hat == b.theta_hat);
    CHECK(a.lambda_used == b.lambda_used);
    CHECK(a.lambda_in == b.lambda_in);
    CHECK(a.theta_in == b.theta_in);

    // Manual four-call composition with the documented stage sub-seeds.
    ThresholdConfig tc;
    tc.alpha = cfg.alpha;
    tc.r = cfg.r;
    tc.B = cfg.B;
    tc.seed = derive_stream(cfg.seed, StreamPurpose::threshold_in);
    double lambda_in = threshold_lambda(grid, zgrid, cfg.theta_pre, tc);
    double theta_in = estimate_theta(grid, zgrid, lambda_in);
    tc.seed = derive_stream(cfg.seed, StreamPurpose::threshold_fi);
    double lambda_fi = threshold_lambda(grid, zgrid, theta_in, tc);
    double theta_hat = estimate_theta(grid, zgrid, lambda_fi);

    CHECK(a.lambda_in == lambda_in);
    CHECK(a.theta_in == theta_in);
    CHECK(a.lambda_used == lambda_fi);
    CHECK(a.theta_hat == theta_hat);

    // Reusing stage-2 multipliers is the configurable alternative.
    cfg.reuse_multipliers = true;
    ChangePointEstimate c = adaptive_estimate(grid, zgrid, cfg);
    tc.seed = derive_stream(cfg.seed, StreamPurpose::threshold_in);
    CHECK(c.lambda_used == threshold_lambda(grid, zgrid, c.theta_in, tc));
}

TEST_CASE("adaptive_estimate: deviation shrinks as the horizon grows" * doctest::timeout(600)) {
    // Abrupt-type change realised as a piecewise-constant stable kernel.
    TailKernel kernel = StableKernel::piecewise(0.6, 0.5, 1.8, 0.5, 0.5);
    ZGrid zgrid = ZGrid::pure_jump_default();
    const std::size_t runs = 30;

    double prev_l1 = 1e9;
    std::size_t n = 4000;
    for (double kn : {50.0, 100.0, 250.0}) {
        double l1 = 0.0;
        for (std::size_t i = 0; i < runs; ++i) {
            PathConfig pc;
            pc.n = n;
            pc.delta_n = kn / static_cast<double>(n);
            pc.kernel = kernel;
            pc.seed = derive_stream(888 + static_cast<std::uint64_t>(kn), StreamPurpose::mc_run, i);
            IncrementGrid grid = IncrementGrid::from_path(simulate_path(pc));
            AdaptiveConfig cfg;
            cfg.theta_pre = 0.1;
            cfg.alpha = 0.1;
            cfg.r = 0.01;
            cfg.B = 100;
            cfg.seed = pc.seed;
            l1 += std::abs(adaptive_estimate(grid, zgrid, cfg).theta_hat - 0.5);
        }
        l1 /= static_cast<double>(runs);
        MESSAGE("k_n=", kn, " l1=", l1);
        CHECK(l1 < prev_l1);
        prev_l1 = l1;
    }
}
