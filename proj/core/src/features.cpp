#include "semialg/features.hpp"

#include "semialg/errors.hpp"

#include <algorithm>
#include <cmath>

namespace semialg {

const char* to_string(ArcClass c) {
    switch (c) {
    case ArcClass::ConvexDown: return "ConvexDown";
    case ArcClass::ConvexUpIncreasing: return "ConvexUpIncreasing";
    case ArcClass::ConvexUpDecreasing: return "ConvexUpDecreasing";
    case ArcClass::Linear: return "Linear";
    }
    return "Unknown";
}

namespace {

std::vector<double> zeros_of(const Polynomial& p, Interval window, double tol) {
    if (p.is_zero()) return {};
    return isolate_real_roots(p, window, tol).values();
}

// Signs of p just left and right of zeros[i]; offset is max(tol, gap/4).
std::pair<double, double> flanks(const Polynomial& p, const std::vector<double>& zeros, std::size_t i,
                                 Interval window, double tol) {
    double gap = std::max(1.0, window.width());
    if (i > 0) gap = std::min(gap, zeros[i] - zeros[i - 1]);
    if (i + 1 < zeros.size()) gap = std::min(gap, zeros[i + 1] - zeros[i]);
    const double d = std::max(tol, gap / 4.0);
    return {p(zeros[i] - d), p(zeros[i] + d)};
}

bool sign_changes_inside(const Polynomial& p, Interval arc, double tol) {
    if (p.is_zero()) return false;
    // Neighbouring zeros just outside the arc must bound the flank offsets too.
    const Interval wide{arc.lo - arc.width(), arc.hi + arc.width()};
    const std::vector<double> z = zeros_of(p, wide, tol);
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] <= arc.lo + tol || z[i] >= arc.hi - tol) continue;
        const auto [l, r] = flanks(p, z, i, wide, tol);
        if (l * r < 0.0) return true;
    }
    return false;
}

// Sign of p somewhere in the open arc, skipping isolated zeros.
double interior_sign(const Polynomial& p, Interval arc) {
    for (double frac : {0.5, 1.0 / 3.0, 2.0 / 3.0, 0.25, 0.75}) {
        const double v = p(arc.lo + frac * arc.width());
        if (v != 0.0) return v;
    }
    return 0.0;
}

}  // namespace

CriticalProfile critical_profile(const Polynomial& f, Interval window, double tol) {
    CriticalProfile out;
    const Polynomial d1 = f.derivative();
    const Polynomial d2 = d1.derivative();

    const Interval wide{window.lo - window.width(), window.hi + window.width()};
    const std::vector<double> z1 = zeros_of(d1, wide, tol);
    for (std::size_t i = 0; i < z1.size(); ++i) {
        if (!window.contains(z1[i])) continue;
        out.f_prime_zeros.push_back(z1[i]);
        const auto [l, r] = flanks(d1, z1, i, wide, tol);
        if (l < 0.0 && r > 0.0) out.local_minima.push_back(z1[i]);
    }
    const std::vector<double> z2 = zeros_of(d2, wide, tol);
    for (std::size_t i = 0; i < z2.size(); ++i) {
        if (!window.contains(z2[i])) continue;
        const auto [l, r] = flanks(d2, z2, i, wide, tol);
        if (l * r < 0.0) out.strict_inflections.push_back(z2[i]);
    }
    return out;
}

ArcClass classify_arc(const Polynomial& f, Interval arc, double tol) {
    const Polynomial d1 = f.derivative();
    const Polynomial d2 = d1.derivative();
    if (d2.is_zero()) return ArcClass::Linear;
    if (sign_changes_inside(d2, arc, tol)) throw Error(ErrorKind::MixedSigns, "f'' changes sign inside the arc");
    if (interior_sign(d2, arc) < 0.0) return ArcClass::ConvexDown;
    if (sign_changes_inside(d1, arc, tol)) throw Error(ErrorKind::MixedSigns, "f' changes sign inside the arc");
    return interior_sign(d1, arc) >= 0.0 ? ArcClass::ConvexUpIncreasing : ArcClass::ConvexUpDecreasing;
}

std::vector<double> profile_breakpoints(const CriticalProfile& profile, double tol) {
    std::vector<double> all = profile.f_prime_zeros;
    all.insert(all.end(), profile.strict_inflections.begin(), profile.strict_inflections.end());
    std::sort(all.begin(), all.end());
    std::vector<double> out;
    for (double x : all)
        if (out.empty() || x - out.back() > tol) out.push_back(x);
    return out;
}

}  // namespace semialg
