#include <doctest.h>

#include <cmath>
#include <vector>

#include "jumpcp/hypothesis.hpp"
#include "jumpcp/simulate.hpp"

using namespace jumpcp;

TEST_CASE("tests: zero increments never reject") {
    IncrementGrid zeros(std::vector<double>(50, 0.0), 0.5);
    TestConfig cfg;
    cfg.alpha = 0.05;
    cfg.B = 40;

    TestReport local = test_local(zeros, 1.0, cfg);
    CHECK(local.statistic == 0.0);
    CHECK_FALSE(local.reject);
    CHECK(local.p_value == 1.0);

    TestReport global = test_global(zeros, ZGrid::pure_jump_default(), cfg);
    CHECK(global.statistic == 0.0);
    CHECK_FALSE(global.reject);

    CHECK_THROWS_AS(test_local(zeros, 0.0, cfg), ConfigError);
}

TEST_CASE("tests: report invariants on simulated data") {
    PathConfig pc;
    pc.n = 2000;
    pc.delta_n = 1.0 / 40.0;
    pc.kernel = SimKernel{};
    pc.seed = 555;
    IncrementGrid grid = IncrementGrid::from_path(simulate_path(pc));

    TestConfig cfg;
    cfg.alpha = 0.05;
    cfg.B = 100;
    cfg.seed = 31;

    TestReport global = test_global(grid, ZGrid::pure_jump_default(), cfg);
    CHECK(global.statistic > 0.0);
    CHECK(global.reject == (global.statistic >= global.critical_value));
    CHECK(global.p_value > 0.0);
    CHECK(global.p_value <= 1.0);
    CHECK(global.draws_max >= global.critical_value);

    TestReport local = test_local(grid, 1.0, cfg);
    CHECK(local.kind == "local");
    CHECK(local.z0 == 1.0);
    CHECK(local.reject == (local.statistic >= local.critical_value));

    // Same seed, same draws: nested rejection regions across alpha.
    for (double alpha_low : {0.01, 0.02}) {
        TestConfig strict = cfg;
        strict.alpha = alpha_low;
        TestReport tight = test_global(grid, ZGrid::pure_jump_default(), strict);
        CHECK(tight.critical_value >= global.critical_value);
        if (tight.reject) CHECK(global.reject);
    }

    // Reject flag consistent with the p-value up to the (B+1) grid.
    double slack = 2.0 / (static_cast<double>(cfg.B) + 1.0);
    if (global.p_value <= cfg.alpha - slack) CHECK(global.reject);
    if (global.p_value > cfg.alpha + slack) CHECK_FALSE(global.reject);
}

TEST_CASE("tests: no rejection when bootstrap draws dominate the statistic") {
    // Alternating qualifying increments: the empirical tail grows almost
    // proportionally (statistic is a small step artifact) while eta = 1/2
    // keeps the bootstrap draws alive and comparatively large.
    std::vector<double> incr(24);
    for (std::size_t i = 0; i < incr.size(); ++i) incr[i] = i % 2 == 0 ? 5.0 : 0.0;
    IncrementGrid grid(incr, 0.4);
    TestConfig cfg;
    cfg.alpha = 0.05;
    cfg.B = 200;
    cfg.seed = 7;
    TestReport report = test_local(grid, 1.0, cfg);
    CHECK(report.statistic > 0.0);
    CHECK(report.statistic < report.critical_value);
    CHECK_FALSE(report.reject);
    CHECK(report.p_value > 0.5);
}

TEST_CASE("tests: local-test power decreases in z0 (fewer large jumps)") {
    // Linear change at theta0 = 0.4 with amplitude 5: the tail variation at
    // z0 scales like z0^{-1/2}, so rejection rates must fall as z0 grows.
    const std::size_t runs = 60;
    const std::vector<double> z0s = {0.25, 1.0, 2.0};
    std::vector<double> rates(z0s.size(), 0.0);
    for (std::size_t i = 0; i < runs; ++i) {
        PathConfig pc;
        pc.n = 2500;
        pc.delta_n = 0.1; // k_n = 250
        pc.kernel = SimKernel{0.4, 5.0, 1.0};
        pc.seed = derive_stream(2468, StreamPurpose::mc_run, i);
        IncrementGrid grid = IncrementGrid::from_path(simulate_path(pc));
        for (std::size_t q = 0; q < z0s.size(); ++q) {
            TestConfig cfg;
            cfg.alpha = 0.05;
            cfg.B = 100;
            cfg.seed = derive_stream(pc.seed, StreamPurpose::test_stat, q);
            if (test_local(grid, z0s[q], cfg).reject) rates[q] += 1.0;
        }
    }
    for (auto& r : rates) r /= static_cast<double>(runs);
    MESSAGE("local power by z0: ", rates[0], " ", rates[1], " ", rates[2]);
    CHECK(rates[0] > rates[1]);
    CHECK(rates[1] > rates[2]);
}

TEST_CASE("tests: power grows with the change and shows in both procedures") {
    PathConfig pc;
    pc.n = 2500;
    pc.delta_n = 1.0 / 50.0; // k_n = 50
    pc.kernel = SimKernel{0.4, 150.0, 1.0};
    pc.seed = 99;
    IncrementGrid grid = IncrementGrid::from_path(simulate_path(pc));

    TestConfig cfg;
    cfg.alpha = 0.05;
    cfg.B = 100;
    cfg.seed = 41;
    TestReport global = test_global(grid, ZGrid::pure_jump_default(), cfg);
    CHECK(global.reject);
    TestReport local = test_local(grid, 0.25, cfg);
    CHECK(local.reject);
}
