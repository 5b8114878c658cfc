#pragma once

#include <cstdint>
#include <string>

#include "jumpcp/bootstrap.hpp"
#include "jumpcp/increments.hpp"
#include "jumpcp/zgrid.hpp"

namespace jumpcp {

struct TestReport {
    std::string kind;            // "global" or "local"
    double statistic = 0.0;      // sqrt(k_n)-scaled sup
    double critical_value = 0.0; // ceil(B (1 - alpha))-th order statistic of the draws
    bool reject = false;
    double p_value = 1.0;        // (1 + #{draws >= statistic}) / (B + 1)
    double alpha = 0.05;
    std::size_t B = 200;
    double z0 = 0.0;             // local test only
    double draws_mean = 0.0;
    double draws_sd = 0.0;
    double draws_max = 0.0;
    std::uint64_t seed = 0;
};

struct TestConfig {
    double alpha = 0.05;
    std::size_t B = 200;
    MultiplierKind multiplier = {};
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

// Global test of a time-constant jump behaviour over all grid tail values:
// reject when sqrt(k_n) D_n^{(eps)}(1) reaches the (1 - alpha) bootstrap
// quantile of hat H_n^{(eps)}(1).
TestReport test_global(const IncrementGrid& grid, const ZGrid& zgrid, const TestConfig& cfg);

// Local test at a fixed tail value z0, based on
// W_n^{(z0)} = sqrt(k_n) sup_C |D_n(., ., z0)|.
TestReport test_local(const IncrementGrid& grid, double z0, const TestConfig& cfg);

} // namespace jumpcp
