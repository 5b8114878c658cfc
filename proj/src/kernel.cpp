#include "jumpcp/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "jumpcp/quadrature.hpp"

namespace jumpcp {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void check_domain(double y, double z) {
    if (z == 0.0) throw ConfigError("tail: z = 0 is not in the domain of a tail integral");
    if (!(y >= 0.0 && y <= 1.0)) throw ConfigError("tail: y must lie in [0, 1]");
    if (std::isnan(z)) throw DataError("tail: z is NaN");
}

} // namespace

double tail(const TailKernel& kernel, double y, double z) {
    check_domain(y, z);
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, AbruptKernel>) {
                return y <= k.theta0 ? k.nu1_tail(z) : k.nu2_tail(z);
            } else if constexpr (std::is_same_v<K, StableKernel>) {
                return k.amplitude(y) / std::pow(std::abs(z), k.index(y));
            } else if constexpr (std::is_same_v<K, SimKernel>) {
                if (z < 0.0) return 0.0;
                return std::sqrt(k.gamma(y) / (kPi * z));
            } else {
                return k.tail(z);
            }
        },
        kernel);
}

double integrated_tail(const TailKernel& kernel, double theta, double z) {
    check_domain(0.0, z);
    if (!(theta >= 0.0 && theta <= 1.0))
        throw ConfigError("integrated_tail: theta must lie in [0, 1]");
    if (theta == 0.0) return 0.0;
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, AbruptKernel>) {
                if (theta <= k.theta0) return theta * k.nu1_tail(z);
                return k.theta0 * k.nu1_tail(z) + (theta - k.theta0) * k.nu2_tail(z);
            } else if constexpr (std::is_same_v<K, StableKernel>) {
                return integrate([&](double y) { return tail(kernel, y, z); }, 0.0, theta,
                                 k.breakpoints);
            } else if constexpr (std::is_same_v<K, SimKernel>) {
                if (z < 0.0) return 0.0;
                double scale = 1.0 / std::sqrt(kPi * z);
                if (theta <= k.theta0 || k.amplitude == 0.0) return scale * theta;
                double head = k.theta0;
                double u = theta - k.theta0;
                if (k.smoothness == 1.0) {
                    // int_0^u sqrt(A t + 1) dt = 2/(3A) ((A u + 1)^{3/2} - 1)
                    double body =
                        2.0 / (3.0 * k.amplitude) *
                        (std::pow(k.amplitude * u + 1.0, 1.5) - 1.0);
                    return scale * (head + body);
                }
                double body = integrate(
                    [&](double t) {
                        return std::sqrt(k.amplitude * std::pow(t, k.smoothness) + 1.0);
                    },
                    0.0, u);
                return scale * (head + body);
            } else {
                return theta * k.tail(z);
            }
        },
        kernel);
}

bool has_inverse_tail(const TailKernel& kernel, bool negative_side) {
    return std::visit(
        [&](const auto& k) -> bool {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, StableKernel>) {
                return true;
            } else if constexpr (std::is_same_v<K, SimKernel>) {
                return !negative_side;
            } else {
                return false;
            }
        },
        kernel);
}

double inverse_tail(const TailKernel& kernel, double y, double u) {
    if (!(u > 0.0)) throw ConfigError("inverse_tail: tail level u must be positive");
    if (!(y >= 0.0 && y <= 1.0)) throw ConfigError("inverse_tail: y must lie in [0, 1]");
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, StableKernel>) {
                return std::pow(k.amplitude(y) / u, 1.0 / k.index(y));
            } else if constexpr (std::is_same_v<K, SimKernel>) {
                return k.gamma(y) / (kPi * u * u);
            } else {
                throw ConfigError("inverse_tail: kernel variant has no invertible tail");
            }
        },
        kernel);
}

double inverse_tail_negative(const TailKernel& kernel, double y, double u) {
    if (!(u > 0.0)) throw ConfigError("inverse_tail: tail level u must be positive");
    if (const auto* k = std::get_if<StableKernel>(&kernel))
        return -std::pow(k->amplitude(y) / u, 1.0 / k->index(y));
    throw ConfigError("inverse_tail: kernel variant has no negative-side jumps");
}

double time_variation(const TailKernel& kernel, double kappa, double theta, double z) {
    if (kappa > theta) throw ConfigError("time_variation: kappa <= theta required");
    if (kappa < 0.0 || theta > 1.0) throw ConfigError("time_variation: (kappa, theta) outside C");
    if (theta == 0.0) return 0.0; // kappa = theta = 0; ratio 0/0 := 1 cancels the two terms
    return integrated_tail(kernel, kappa, z) - (kappa / theta) * integrated_tail(kernel, theta, z);
}

namespace {

// sup over the (kappa, theta') lattice for one z, reusing cached values of
// theta -> integrated_tail(theta, z) on the lattice nodes.
double sup_lattice(const std::vector<double>& integral, double theta, std::size_t g) {
    double best = 0.0;
    for (std::size_t j = 1; j <= g; ++j) {
        double tj = theta * static_cast<double>(j) / static_cast<double>(g);
        double ratio_scale = integral[j] / tj;
        for (std::size_t i = 0; i <= j; ++i) {
            double ki = theta * static_cast<double>(i) / static_cast<double>(g);
            best = std::max(best, std::abs(integral[i] - ki * ratio_scale));
        }
    }
    return best;
}

} // namespace

double sup_variation(const TailKernel& kernel, double theta, const ZGrid& zgrid,
                     const SupVariationOptions& opts) {
    if (!(theta >= 0.0 && theta <= 1.0)) throw ConfigError("sup_variation: theta in [0, 1]");
    if (theta == 0.0) return 0.0;

    std::vector<double> zs;
    if (opts.single_z) {
        zs.push_back(*opts.single_z);
    } else {
        zs = zgrid.values();
    }

    if (!opts.force_generic) {
        if (const auto* k = std::get_if<AbruptKernel>(&kernel)) {
            // Exact closed form: V_eps * theta0 * (1 - theta0 / theta) past the
            // break, zero before it, with V_eps the largest tail gap on the grid.
            if (theta <= k->theta0) return 0.0;
            double v_eps = 0.0;
            for (double z : zs)
                v_eps = std::max(v_eps, std::abs(k->nu1_tail(z) - k->nu2_tail(z)));
            return v_eps * k->theta0 * (1.0 - k->theta0 / theta);
        }
    }

    const std::size_t g = std::max<std::size_t>(opts.grid_resolution, 2);
    double best = 0.0;
    std::vector<double> integral(g + 1);
    for (double z : zs) {
        for (std::size_t i = 0; i <= g; ++i) {
            double y = theta * static_cast<double>(i) / static_cast<double>(g);
            integral[i] = integrated_tail(kernel, y, z);
        }
        best = std::max(best, sup_lattice(integral, theta, g));
    }
    return best;
}

double true_change_point(const TailKernel& kernel, const ZGrid& zgrid, double theta_tol,
                         double positivity_tol, const SupVariationOptions& opts) {
    if (!(theta_tol > 0.0)) throw ConfigError("true_change_point: tolerance must be positive");
    if (sup_variation(kernel, 1.0, zgrid, opts) <= positivity_tol) return 1.0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > theta_tol) {
        double mid = 0.5 * (lo + hi);
        if (sup_variation(kernel, mid, zgrid, opts) > positivity_tol)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double small_jump_mass(const TailKernel& kernel, double y, double eps) {
    if (!(eps > 0.0)) throw ConfigError("small_jump_mass: eps must be positive");
    if (const auto* k = std::get_if<SimKernel>(&kernel)) {
        // int_0^eps z nu(dz) = sqrt(gamma(y) eps / pi) for the sqrt-tail model
        return std::sqrt(k->gamma(y) * eps / kPi);
    }
    if (const auto* k = std::get_if<StableKernel>(&kernel)) {
        double beta = k->index(y);
        if (beta >= 1.0)
            throw ConfigError("small_jump_mass: stable index >= 1 has infinite variation");
        double a = k->amplitude(y);
        // both sides: 2 * [ int_0^eps A x^-beta dx - eps * A eps^-beta ]
        double integral = a * std::pow(eps, 1.0 - beta) / (1.0 - beta);
        return 2.0 * (integral - eps * a * std::pow(eps, -beta));
    }
    // Generic route: int_0^eps tail(y, x) dx - eps * tail(y, eps), where the
    // quadrature leaves out a vanishing sliver at the origin.
    double lo = eps * 1e-12;
    double integral = integrate([&](double x) { return tail(kernel, y, x); }, lo, eps, {}, 1e-8);
    double neg = integrate([&](double x) { return tail(kernel, y, -x); }, lo, eps, {}, 1e-8);
    return (integral - eps * tail(kernel, y, eps)) + (neg - eps * tail(kernel, y, -eps));
}

} // namespace jumpcp
