#pragma once

#include <cstddef>
#include <vector>

#include "jumpcp/kernel.hpp"
#include "jumpcp/prefix_stats.hpp"

namespace jumpcp {

// Sequential empirical tail integral U_n(theta, z_k): the number of
// increments up to floor(n theta) falling in I(z_k), divided by k_n.
// Requires the all-ones construction.
double u_n(const PrefixStats& stats, double theta, std::size_t k);

// Empirical measure of time variation
//   D_n(kappa, theta, z) = U_n(kappa, z) - (kappa/theta) U_n(theta, z),
// for 0 <= kappa <= theta <= 1 with 0/0 := 1.
double d_n(const PrefixStats& stats, double kappa, double theta, std::size_t k);

// Supremum curve in raw count units: for each t the exact supremum over
// {0 <= kappa <= theta' <= t/n} x zgrid of k_n |D_n|, evaluated on the
// finite attainment set (see sup_engine.hpp). Length m + 1.
std::vector<double> sup_counts_curve(const PrefixStats& stats, std::size_t m);

// D_n^{(eps)}(j/n) for j = 0..n: the curve above divided by k_n.
std::vector<double> sup_d_n(const PrefixStats& stats);

// W_n^{(z0)} = sqrt(k_n) sup_{(kappa,theta) in C} |D_n(kappa, theta, z0)|.
// z0 must be a grid value of the supplied stats (build a single-z PrefixStats
// for off-grid z0).
double w_stat(const PrefixStats& stats, double z0);

// Centered, scaled deviation from the known truth:
//   G_n(theta, z_k) = sqrt(k_n) { U_n(theta, z_k) - int_0^theta g(y, z_k) dy }.
double gn_diagnostic(const PrefixStats& stats, const TailKernel& kernel, double theta,
                     std::size_t k);

// H_n^{(eps)}(theta) = sup sup sqrt(k_n) |D_n - D|, evaluated on the same
// candidate set with the population D at the grid coordinates.
double hn_sup_diagnostic(const PrefixStats& stats, const TailKernel& kernel, double theta);

} // namespace jumpcp
