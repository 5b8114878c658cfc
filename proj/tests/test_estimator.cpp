#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include "jumpcp/estimator.hpp"
#include "jumpcp/rng.hpp"
#include "jumpcp/simulate.hpp"
#include "oracle.hpp"

using namespace jumpcp;

namespace {

IncrementGrid toy_grid() {
    // increments (0.5, 1.2, -0.3), delta_n = 2/3 so k_n = 2
    return IncrementGrid({0.5, 1.2, -0.3}, 2.0 / 3.0);
}

// Random increment mixture with atoms exactly at grid values to force ties.
std::vector<double> fuzz_increments(SplitRng& rng, std::size_t n,
                                    const std::vector<double>& zs) {
    std::vector<double> incr(n);
    for (std::size_t i = 0; i < n; ++i) {
        double u = rng.uniform01();
        if (u < 0.25) {
            incr[i] = 0.0;
        } else if (u < 0.5 && !zs.empty()) {
            std::size_t k = rng.next_u64() % zs.size();
            incr[i] = zs[k]; // lands exactly on a threshold
        } else if (u < 0.75) {
            incr[i] = rng.uniform(-3.0, 3.0);
        } else {
            incr[i] = rng.gaussian() * 0.2;
        }
    }
    return incr;
}

} // namespace

TEST_CASE("build_prefix: hand columns and weight handling") {
    IncrementGrid grid = toy_grid();
    ZGrid zgrid(0.25, {0.25, 1.0});
    PrefixStats stats(grid, zgrid);

    CHECK(stats.column(1) == std::vector<double>{0.0, 0.0, 1.0, 1.0});
    CHECK(stats.column(0) == std::vector<double>{0.0, 1.0, 2.0, 2.0});
    CHECK(stats.eta(1) == doctest::Approx(1.0 / 3.0));

    PrefixStats ones(grid, zgrid, std::vector<double>{1.0, 1.0, 1.0});
    CHECK(ones.column(0) == stats.column(0));
    CHECK(ones.column(1) == stats.column(1));

    IncrementGrid zeros({0.0, 0.0, 0.0, 0.0}, 0.5);
    PrefixStats zstats(zeros, zgrid);
    for (double v : zstats.column(1)) CHECK(v == 0.0);

    CHECK_THROWS_AS(PrefixStats(grid, zgrid, std::vector<double>{1.0}), ConfigError);
}

TEST_CASE("u_n: counting increments in the tail") {
    PrefixStats stats(toy_grid(), ZGrid(0.25, {0.25, 1.0}));
    CHECK(u_n(stats, 0.0, 1) == 0.0);
    CHECK(u_n(stats, 1.0, 1) == doctest::Approx(0.5));
    CHECK(u_n(stats, 1.0, 0) == doctest::Approx(1.0));

    // U_n * k_n is an integer count; U_n non-increasing in z > 0.
    CHECK(u_n(stats, 1.0, 1) * stats.k_n() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(u_n(stats, 1.0, 0) >= u_n(stats, 1.0, 1));
}

TEST_CASE("d_n: hand values and conventions") {
    PrefixStats stats(toy_grid(), ZGrid(0.25, {0.25, 1.0}));
    CHECK(d_n(stats, 2.0 / 3.0, 1.0, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(d_n(stats, 0.0, 0.7, 1) == 0.0);
    CHECK(d_n(stats, 0.0, 0.0, 1) == 0.0);
    for (double t : {1.0 / 3.0, 2.0 / 3.0, 1.0})
        CHECK(d_n(stats, t, t, 1) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS(d_n(stats, 0.9, 0.5, 1), ConfigError);
}

TEST_CASE("sup_d_n: degenerate inputs and basic shape") {
    ZGrid zgrid(0.25, {0.25, 1.0});

    IncrementGrid zeros({0.0, 0.0, 0.0, 0.0, 0.0}, 0.5);
    auto curve0 = sup_d_n(PrefixStats(zeros, zgrid));
    for (double v : curve0) CHECK(v == 0.0);

    PrefixStats stats(toy_grid(), zgrid);
    auto curve = sup_d_n(stats);
    REQUIRE(curve.size() == 4);
    CHECK(curve[0] == 0.0);
    for (std::size_t t = 1; t < curve.size(); ++t) CHECK(curve[t] >= curve[t - 1]);
    // Hand value: the largest deviation is the left-limit candidate at the
    // second increment, |0 - 1 * 1| / k_n.
    CHECK(curve[3] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("sup engine equals brute force on fuzzed paths") {
    SplitRng rng(2024, StreamPurpose::mc_run, 17);
    for (int rep = 0; rep < 60; ++rep) {
        std::size_t n = 5 + rng.next_u64() % 120;
        std::vector<double> zs;
        std::size_t nz = 1 + rng.next_u64() % 4;
        double eps = 0.05 + 0.2 * rng.uniform01();
        for (std::size_t k = 0; k < nz; ++k) {
            double mag = eps + rng.uniform01() * 2.0;
            zs.push_back(rng.bernoulli(0.3) ? -mag : mag);
        }
        std::sort(zs.begin(), zs.end());
        zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
        ZGrid zgrid(eps, zs);
        IncrementGrid grid(fuzz_increments(rng, n, zs), 0.25 + rng.uniform01());

        PrefixStats stats(grid, zgrid);
        auto fast = sup_counts_curve(stats, n);
        auto brute = oracle::sup_counts_curve(grid, zgrid, n);
        REQUIRE(fast.size() == brute.size());
        for (std::size_t t = 0; t <= n; ++t) CHECK(fast[t] == brute[t]);

        double z0 = zs[rng.next_u64() % zs.size()];
        PrefixStats single(grid, ZGrid::single(z0));
        CHECK(w_stat(single, z0) == oracle::w_stat(grid, z0));
    }
}

TEST_CASE("candidate-set sup dominates and approximates the continuum sup") {
    // The engine claims its finite candidate set attains the supremum of
    // |D_n| over the continuum {0 <= kappa <= theta' <= 1}. Evaluate D_n on a
    // dense mesh (with points just below the grid coordinates, where the
    // one-sided limits live): the mesh value can never exceed the engine
    // result, and must approach it as the mesh refines.
    SplitRng rng(31415, StreamPurpose::mc_run, 2);
    for (int rep = 0; rep < 10; ++rep) {
        std::size_t n = 5 + rng.next_u64() % 12;
        double z = 0.5;
        std::vector<double> incr(n);
        for (auto& x : incr) x = rng.bernoulli(0.5) ? 1.0 : -0.2;
        IncrementGrid grid(incr, 0.4);
        PrefixStats stats(grid, ZGrid::single(z));
        double engine = sup_counts_curve(stats, n).back() / grid.k_n();

        const auto& p = stats.column(0);
        auto u = [&](double frac) { return p[floor_index(frac, n)] / grid.k_n(); };
        auto dn = [&](double kappa, double tp) {
            if (tp == 0.0) return 0.0;
            return u(kappa) - (kappa / tp) * u(tp);
        };
        double mesh = 0.0;
        const int M = 400;
        std::vector<double> coords;
        for (int i = 0; i <= M; ++i) coords.push_back(static_cast<double>(i) / M);
        for (std::size_t j = 1; j <= n; ++j) { // one-sided approach points
            double g = static_cast<double>(j) / static_cast<double>(n);
            coords.push_back(g - 1e-7);
        }
        for (double tp : coords) {
            if (tp < 0.0 || tp > 1.0) continue;
            for (double kappa : coords) {
                if (kappa < 0.0 || kappa > tp) continue;
                mesh = std::max(mesh, std::abs(dn(kappa, tp)));
            }
        }
        CHECK(engine >= mesh - 1e-12);          // domination is exact
        CHECK(engine <= mesh + 0.35 * engine + 1e-9); // attained in the limit
    }
}

TEST_CASE("w_stat: definitional coincidence with sup_d_n at theta = 1") {
    IncrementGrid grid = toy_grid();
    PrefixStats single(grid, ZGrid::single(1.0));
    auto curve = sup_d_n(single);
    CHECK(w_stat(single, 1.0) ==
          doctest::Approx(std::sqrt(grid.k_n()) * curve.back()).epsilon(1e-12));

    IncrementGrid zeros({0.0, 0.0, 0.0}, 0.5);
    PrefixStats zstats(zeros, ZGrid::single(1.0));
    CHECK(w_stat(zstats, 1.0) == 0.0);
    CHECK_THROWS_AS(w_stat(zstats, 2.0), ConfigError);
}

TEST_CASE("gn_diagnostic: zero kernel on zero data") {
    IncrementGrid zeros({0.0, 0.0, 0.0}, 0.5);
    PrefixStats stats(zeros, ZGrid::single(1.0));
    TailKernel none = ConstantKernel{[](double) { return 0.0; }};
    CHECK(gn_diagnostic(stats, none, 1.0, 0) == 0.0);
    CHECK(hn_sup_diagnostic(stats, none, 1.0) == 0.0);
}

TEST_CASE("gn_diagnostic: CLT centering and variance over simulated paths" *
          doctest::skip(false)) {
    // Constant kernel (gamma == 1): G_n(1, z) should center on zero with
    // variance close to the integrated tail.
    PathConfig pc;
    pc.n = 4000;
    pc.delta_n = 1.0 / 80.0; // k_n = 50
    pc.kernel = SimKernel{};
    const std::size_t reps = 200;
    const double z = 0.25;
    TailKernel kernel = pc.kernel;
    double want_var = integrated_tail(kernel, 1.0, z);

    double sum = 0.0, sum2 = 0.0;
    for (std::size_t i = 0; i < reps; ++i) {
        pc.seed = derive_stream(555, StreamPurpose::mc_run, i);
        SamplePath path = simulate_path(pc);
        IncrementGrid grid = IncrementGrid::from_path(path);
        PrefixStats stats(grid, ZGrid::single(z));
        double g = gn_diagnostic(stats, kernel, 1.0, 0);
        sum += g;
        sum2 += g * g;
    }
    double mean = sum / reps;
    double var = sum2 / reps - mean * mean;
    double se_mean = std::sqrt(want_var / reps);
    CHECK(std::abs(mean) < 3.0 * se_mean + 0.05);
    CHECK(var / want_var > 0.65);
    CHECK(var / want_var < 1.35);
}

TEST_CASE("hn_sup_diagnostic agrees with a direct candidate enumeration") {
    SplitRng rng(77, StreamPurpose::mc_run, 3);
    std::vector<double> zs = {0.5, 1.5};
    IncrementGrid grid(fuzz_increments(rng, 40, zs), 0.3);
    ZGrid zgrid(0.5, zs);
    TailKernel kernel = ConstantKernel{[](double z) { return std::exp(-std::abs(z)); }};
    PrefixStats stats(grid, zgrid);

    double kn = grid.k_n();
    std::size_t n = grid.n();
    double best = 0.0;
    for (double z : zs) {
        auto p = oracle::prefix_counts(grid.increments, z);
        std::vector<double> at(n + 1), left(n + 1);
        for (std::size_t t = 0; t <= n; ++t) {
            double centering =
                kn * integrated_tail(kernel, static_cast<double>(t) / static_cast<double>(n), z);
            at[t] = p[t] - centering;
            left[t] = (t == 0 ? p[0] : p[t - 1]) - centering;
        }
        auto curve = oracle::sup_curve_pairs(at, left, n);
        best = std::max(best, curve[n]);
    }
    CHECK(hn_sup_diagnostic(stats, kernel, 1.0) ==
          doctest::Approx(best / std::sqrt(kn)).epsilon(1e-12));
}

TEST_CASE("full curve for n = 22500, five z values stays fast") {
    SplitRng rng(9, StreamPurpose::mc_run, 0);
    std::size_t n = 22500;
    std::vector<double> incr(n);
    for (auto& x : incr) x = rng.gaussian();
    IncrementGrid grid(std::move(incr), 1.0 / 450.0);
    PrefixStats stats(grid, ZGrid::pure_jump_default());
    auto t0 = std::chrono::steady_clock::now();
    auto curve = sup_d_n(stats);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(curve.size() == n + 1);
    CHECK(curve.back() > 0.0);
    MESSAGE("sup_d_n curve, n=22500, |z|=5: ", elapsed, " s");
    CHECK(elapsed < 5.0); // budget is < 1 s in release builds
}
