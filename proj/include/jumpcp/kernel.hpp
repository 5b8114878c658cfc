#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "jumpcp/common.hpp"
#include "jumpcp/zgrid.hpp"

namespace jumpcp {

// Transition kernels are represented through their one-sided tail integrals
// g(y, z) = g(y, [z, inf)) for z > 0 and g(y, (-inf, z]) for z < 0, with
// y in [0, 1] the fraction of the covered time horizon. Tail integrals are
// all the implemented statistics ever consume; densities are never needed.

using TailFn = std::function<double(double)>; // z -> nu(I(z)), z != 0

// Jump measure nu_1 up to the break at theta0, nu_2 afterwards.
struct AbruptKernel {
    TailFn nu1_tail;
    TailFn nu2_tail;
    double theta0 = 0.5;
};

// Locally stable behaviour: tail A(y) / |z|^beta(y) on both sides. A bounded
// and positive, beta in (0, 2) bounded away from 2; both continuous outside
// the listed breakpoints.
struct StableKernel {
    std::function<double(double)> amplitude;  // y -> A(y) > 0
    std::function<double(double)> index;      // y -> beta(y) in (0, 2)
    std::vector<double> breakpoints;          // discontinuities of A or beta

    static StableKernel constant(double a0, double beta0) {
        return StableKernel{[a0](double) { return a0; }, [beta0](double) { return beta0; }, {}};
    }

    // Piecewise-constant in y with a single break: an abrupt change between
    // two stable regimes. Supports inverse-tail sampling, so it doubles as
    // the simulable realisation of an abrupt change.
    static StableKernel piecewise(double a0, double beta0, double a1, double beta1, double theta0) {
        return StableKernel{
            [a0, a1, theta0](double y) { return y <= theta0 ? a0 : a1; },
            [beta0, beta1, theta0](double y) { return y <= theta0 ? beta0 : beta1; },
            {theta0}};
    }
};

// The simulation-study model: one-sided tail sqrt(gamma(y) / (pi z)) for
// z > 0 and zero for z < 0, where gamma(y) = 1 up to theta0 and
// A (y - theta0)^w + 1 afterwards. theta0 = 1 or A = 0 gives the no-change
// null (a 1/2-stable subordinator).
struct SimKernel {
    double theta0 = 1.0;
    double amplitude = 0.0; // A >= 0
    double smoothness = 1.0; // w > 0

    double gamma(double y) const {
        if (y <= theta0 || amplitude == 0.0) return 1.0;
        return amplitude * std::pow(y - theta0, smoothness) + 1.0;
    }
};

// Time-constant kernel given by a single tail function.
struct ConstantKernel {
    TailFn tail;
};

using TailKernel = std::variant<AbruptKernel, StableKernel, SimKernel, ConstantKernel>;

// g(y, I(z)); exact closed form per variant. z = 0 is rejected (the kernel
// does not charge {0}), y outside [0, 1] is rejected.
double tail(const TailKernel& kernel, double y, double z);

// int_0^theta g(y, z) dy. Closed form for the abrupt, constant and (w = 1)
// simulation variants; adaptive quadrature to 1e-10 relative otherwise.
double integrated_tail(const TailKernel& kernel, double theta, double z);

// The z > 0 with tail(y, z) = u, for variants with a strictly monotone
// positive-side tail (SimKernel, StableKernel). u must be positive.
double inverse_tail(const TailKernel& kernel, double y, double u);

// True of variants supporting inverse_tail on the given side.
bool has_inverse_tail(const TailKernel& kernel, bool negative_side);

// Inverse of the negative-side tail: the z < 0 with tail(y, z) = u.
// Only the stable variants carry negative jumps.
double inverse_tail_negative(const TailKernel& kernel, double y, double u);

// Measure of time variation
//   D(kappa, theta, z) = int_0^kappa g(y,z) dy - (kappa/theta) int_0^theta g(y,z) dy
// for 0 <= kappa <= theta <= 1, with the convention 0/0 := 1.
double time_variation(const TailKernel& kernel, double kappa, double theta, double z);

struct SupVariationOptions {
    std::size_t grid_resolution = 1000;     // points per (kappa, theta') axis
    std::optional<double> single_z = {};    // restrict to one tail value (local version)
    bool force_generic = false;             // skip the abrupt-kernel closed form
};

// sup over z in the grid (or the single z) and 0 <= kappa <= theta' <= theta
// of |D(kappa, theta', z)|. The abrupt variant uses the exact closed form
// V_eps * theta0 * (1 - theta0/theta); other variants evaluate D on a
// grid_resolution^2 lattice of (kappa, theta') values.
double sup_variation(const TailKernel& kernel, double theta, const ZGrid& zgrid,
                     const SupVariationOptions& opts = {});

// inf{theta : sup_variation(theta) > positivity_tol}, located by bisection to
// theta_tol; returns 1 when the set is empty.
double true_change_point(const TailKernel& kernel, const ZGrid& zgrid, double theta_tol = 1e-4,
                         double positivity_tol = 1e-9,
                         const SupVariationOptions& opts = {});

// Mass of the small jumps dropped by the truncated simulator,
// int_0^eps z nu_y(dz), computed as int_0^eps tail(y,x) dx - eps * tail(y,eps).
// Infinite-variation kernels (stable with beta >= 1) are rejected.
double small_jump_mass(const TailKernel& kernel, double y, double eps);

} // namespace jumpcp
