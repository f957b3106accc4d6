#pragma once

#include <cmath>

namespace semialg {

namespace detail {

template <class F>
double simpson_step(const F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                    int depth) {
    const double m = 0.5 * (a + b);
    const double flm = f(0.5 * (a + m));
    const double frm = f(0.5 * (m + b));
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
/// The range is split in four up front so symmetric integrands can't fool the first estimate.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol, int max_depth = 40) {
    if (a == b) return 0.0;
    double total = 0.0;
    const double h = (b - a) / 4.0;
    for (int i = 0; i < 4; ++i) {
        const double lo = a + i * h;
        const double hi = i == 3 ? b : lo + h;
        const double flo = f(lo);
        const double fhi = f(hi);
        const double fm = f(0.5 * (lo + hi));
        const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fm + fhi);
        total += detail::simpson_step(f, lo, hi, flo, fm, fhi, whole, tol / 4.0, max_depth);
    }
    return total;
}

}  // namespace semialg
