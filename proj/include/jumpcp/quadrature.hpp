#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jumpcp {

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, double achieved)
        : std::runtime_error(msg + " (achieved error estimate " + std::to_string(achieved) + ")"),
          achieved_error(achieved) {}
    double achieved_error;
};

namespace detail {

inline double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double fa,
                               double b, double fb, double m, double fm, double whole, double tol,
                               int depth, double& worst_err) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, fa, m, fm, flm);
    double right = simpson(m, fm, b, fb, frm);
    double err = (left + right - whole) / 15.0;
    if (std::abs(err) <= tol || (b - a) < 1e-14 * (std::abs(a) + std::abs(b) + 1.0)) {
        if (depth <= 0 && std::abs(err) > tol && std::abs(err) > worst_err)
            worst_err = std::abs(err);
        return left + right + err;
    }
    if (depth <= 0) {
        if (std::abs(err) > worst_err) worst_err = std::abs(err);
        return left + right + err;
    }
    return adaptive_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, worst_err) +
           adaptive_simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, worst_err);
}

} // namespace detail

// Adaptive Simpson integration of f over [a, b], splitting at the supplied
// interior breakpoints (kernel discontinuities). Tolerance is relative to the
// accumulated integral magnitude, floored at 1e-14 absolute. Throws
// QuadratureError with the achieved error estimate when refinement bottoms
// out before reaching the tolerance.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        std::vector<double> breakpoints = {}, double rel_tol = 1e-10) {
    if (b <= a) return 0.0;
    breakpoints.push_back(a);
    breakpoints.push_back(b);
    std::sort(breakpoints.begin(), breakpoints.end());
    double total = 0.0;
    double worst_err = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        double lo = breakpoints[i], hi = breakpoints[i + 1];
        if (hi <= a || lo >= b) continue;
        lo = std::max(lo, a);
        hi = std::min(hi, b);
        if (hi - lo < 1e-15) continue;
        double m = 0.5 * (lo + hi);
        double flo = f(lo), fhi = f(hi), fm = f(m);
        double whole = detail::simpson(lo, flo, hi, fhi, fm);
        double tol = std::max(rel_tol * std::abs(whole), 1e-14);
        total += detail::adaptive_simpson(f, lo, flo, hi, fhi, m, fm, whole, tol, 48, worst_err);
    }
    double allowed = std::max(rel_tol * std::abs(total), 1e-13);
    if (worst_err > allowed)
        throw QuadratureError("quadrature failed to converge", worst_err);
    return total;
}

} // namespace jumpcp
