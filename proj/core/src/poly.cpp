#include "semialg/poly.hpp"

#include "semialg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace semialg {

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

Polynomial Polynomial::shifted(double c) const { return *this + constant(c); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<double> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
}

Polynomial operator*(double s, const Polynomial& a) {
    std::vector<double> r = a.coeffs_;
    for (double& c : r) c *= s;
    return Polynomial(std::move(r));
}

double eval(const Polynomial& p, double x) { return p(x); }

Polynomial derivative(const Polynomial& p) { return p.derivative(); }

std::vector<double> RootSet::values() const {
    std::vector<double> v;
    v.reserve(roots.size());
    for (const auto& r : roots) v.push_back(r.value);
    return v;
}

namespace {

// Running-error bound of Horner evaluation, up to a constant factor.
double horner_scale(const Polynomial& p, double x) {
    double acc = 0.0;
    const double ax = std::abs(x);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * ax + std::abs(*it);
    return acc;
}

bool near_zero(const Polynomial& p, double x) {
    constexpr double k = 1e4 * std::numeric_limits<double>::epsilon();
    return std::abs(p(x)) <= k * horner_scale(p, x);
}

int sign_of(const Polynomial& p, double x) {
    if (near_zero(p, x)) return 0;
    return p(x) > 0.0 ? 1 : -1;
}

// Root of a polynomial that changes sign strictly between a and b.
Root bisect(const Polynomial& p, double a, double b, int sign_a, double tol) {
    Interval bracket{a, b};
    bool bracket_set = b - a <= tol;
    for (int iter = 0; iter < 200; ++iter) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const double v = p(m);
        if (v == 0.0) {
            a = b = m;
            break;
        }
        if ((v > 0.0) == (sign_a > 0)) {
            a = m;
        } else {
            b = m;
        }
        if (!bracket_set && b - a <= tol) {
            bracket = {a, b};
            bracket_set = true;
        }
    }
    const double value = 0.5 * (a + b);
    if (!bracket_set) bracket = {a, b};
    bracket.lo = std::min(bracket.lo, value);
    bracket.hi = std::max(bracket.hi, value);
    return {bracket, value, Multiplicity::Simple};
}

std::vector<Root> find_roots(const Polynomial& p, double lo, double hi, double tol) {
    std::vector<Root> out;
    const int deg = p.degree();
    if (deg <= 0) return out;
    if (deg == 1) {
        const double r = -p.coeff(0) / p.coeff(1);
        if (r >= lo && r <= hi) out.push_back({{r, r}, r, Multiplicity::Simple});
        return out;
    }
    const Polynomial dp = p.derivative();
    std::vector<double> pts{lo};
    for (const Root& c : find_roots(dp, lo, hi, tol)) {
        if (c.value > pts.back() && c.value < hi) pts.push_back(c.value);
    }
    pts.push_back(hi);

    std::vector<int> signs(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) signs[i] = sign_of(p, pts[i]);

    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (signs[i] != 0) continue;
        const bool critical = i != 0 && i + 1 != pts.size();
        const bool multiple = critical || near_zero(dp, pts[i]);
        out.push_back({{pts[i], pts[i]}, pts[i], multiple ? Multiplicity::SuspectedMultiple : Multiplicity::Simple});
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (signs[i] * signs[i + 1] < 0) out.push_back(bisect(p, pts[i], pts[i + 1], signs[i], tol));
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
    return out;
}

}  // namespace

RootSet isolate_real_roots(const Polynomial& p, Interval window, double tol) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root set of the zero polynomial is the whole window");
    if (window.lo > window.hi) std::swap(window.lo, window.hi);
    std::vector<Root> raw = find_roots(p, window.lo, window.hi, tol);

    RootSet set;
    for (const Root& r : raw) {
        if (!set.roots.empty() && r.value - set.roots.back().value < tol) {
            Root& last = set.roots.back();
            last.value = 0.5 * (last.value + r.value);
            last.bracket.lo = std::min(last.bracket.lo, r.bracket.lo);
            last.bracket.hi = std::max(last.bracket.hi, r.bracket.hi);
            last.multiplicity = Multiplicity::SuspectedMultiple;
            continue;
        }
        set.roots.push_back(r);
    }
    return set;
}

double root_bound(const Polynomial& p) {
    if (p.degree() <= 0) return 1.0;
    const double lead = std::abs(p.coeffs().back());
    double m = 0.0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, std::abs(p.coeff(i)) / lead);
    return 1.0 + m;
}

RootSet all_real_roots(const Polynomial& p, double tol) {
    const double b = root_bound(p);
    return isolate_real_roots(p, {-b, b}, tol);
}

double normalize_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double t = std::fmod(theta, two_pi);
    if (t < 0.0) t += two_pi;
    if (t >= two_pi) t = 0.0;
    return t;
}

Point RotatedGraph::point_at(double t) const { return rotation().to_world({t, poly(t)}); }

Point RotatedGraph::tangent_at(double t) const { return rotation().to_world({1.0, poly.derivative()(t)}); }

double RotatedGraph::local_u(Point world) const { return rotation().to_local(world).x; }

double membership(const RotatedGraph& g, Point p) {
    const Point local = g.rotation().to_local(p);
    return g.poly(local.x) - local.y;
}

Polynomial composed_difference(const RotatedGraph& a, const RotatedGraph& b) {
    const Rotation rot = Rotation::of(a.theta - b.theta);
    const Polynomial t = Polynomial::linear(0.0, 1.0);
    const Polynomial u = rot.c * t - rot.s * a.poly;
    const Polynomial v = rot.s * t + rot.c * a.poly;
    Polynomial h = b.poly.compose(u) - v;

    // Cancellation leaves rounding noise where exact arithmetic gives zeros.
    const double base = std::max({1.0, a.poly.max_abs_coeff(), b.poly.max_abs_coeff()});
    const double scale = std::pow(base, std::max(1, b.poly.degree()));
    if (h.max_abs_coeff() <= 1e-12 * scale) return {};
    std::vector<double> c = h.coeffs();
    while (!c.empty() && std::abs(c.back()) <= 1e-12 * scale) c.pop_back();
    return Polynomial(std::move(c));
}

bool same_graph(const RotatedGraph& a, const RotatedGraph& b) { return composed_difference(a, b).is_zero(); }

Intersections graph_intersections(const RotatedGraph& a, const RotatedGraph& b, Interval window, double tol) {
    Intersections out;
    const Polynomial h = composed_difference(a, b);
    if (h.is_zero()) {
        out.overlap_partial = true;
        return out;
    }
    for (const Root& r : isolate_real_roots(h, window, tol).roots) {
        GraphHit hit;
        hit.t_a = r.value;
        hit.point = a.point_at(r.value);
        hit.t_b = b.local_u(hit.point);
        hit.multiplicity = r.multiplicity;
        out.hits.push_back(hit);
    }
    return out;
}

RotatedGraph line_through(Point p, Point direction) {
    const double theta = normalize_angle(std::atan2(direction.y, direction.x));
    RotatedGraph g{{}, theta};
    const Point local = g.rotation().to_local(p);
    g.poly = Polynomial::constant(local.y);
    return g;
}

RotatedGraph flipped(const RotatedGraph& g) {
    std::vector<double> k = g.poly.coeffs();
    for (std::size_t i = 0; i < k.size(); i += 2) k[i] = -k[i];
    return {Polynomial(std::move(k)), normalize_angle(g.theta + std::numbers::pi)};
}

}  // namespace semialg
