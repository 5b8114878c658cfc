#pragma once

#include <string>
#include <vector>

#include "jumpcp/changepoint.hpp"
#include "jumpcp/hypothesis.hpp"
#include "jumpcp/mc.hpp"
#include "jumpcp/prefix_stats.hpp"

namespace jumpcp {

// Canonical serialisations of the report types: stable key order and
// shortest-round-trip numbers, so identical inputs give identical bytes.

std::string test_report_json(const TestReport& report);
std::string estimate_json(const ChangePointEstimate& estimate);

// {n, delta_n, k_n, zgrid, theta_grid, sup_d_n, u_n table}
std::string analysis_json(const PrefixStats& stats, const std::vector<double>& sup_curve);

// Plot-ready analysis rows: theta, sup_d_n, one U_n column per grid value.
std::string analysis_csv(const PrefixStats& stats, const std::vector<double>& sup_curve);

// include_runtime keeps wall-clock time out of the artifact by default so
// reruns stay byte-identical.
std::string mc_report_json(const McConfig& cfg, const McReport& report,
                           bool include_runtime = false);

// One row per reported metric, keyed by the scenario axes
// (label, k_n, theta0, w, r, z0).
std::string mc_report_csv(const McConfig& cfg, const McReport& report);

} // namespace jumpcp
