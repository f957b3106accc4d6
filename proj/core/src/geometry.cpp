#include "semialg/geometry.hpp"

#include "semialg/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace semialg {

double Box::diameter() const { return std::hypot(width(), height()); }

void Box::include(Point p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
}

namespace {

void extend_by_extrema(const Polynomial& f, Interval range, double& lo, double& hi) {
    const Polynomial d = f.derivative();
    if (d.is_zero()) return;
    for (double t : isolate_real_roots(d, range, 1e-12).values()) {
        const double v = f(t);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
}

}  // namespace

Edge::Edge(RotatedGraph g, Interval param) : graph_(std::move(g)), param_(param) {
    const Point a = start();
    const Point b = end();
    box_ = Box::around(a);
    box_.include(b);
    if (!straight()) {
        extend_by_extrema(x_poly(), param_, box_.xmin, box_.xmax);
        extend_by_extrema(y_poly(), param_, box_.ymin, box_.ymax);
    }
}

Edge Edge::segment(Point a, Point b) {
    RotatedGraph g = line_through(a, b - a);
    return Edge(g, {g.local_u(a), g.local_u(b)});
}

Polynomial Edge::x_poly() const {
    const Rotation r = graph_.rotation();
    return r.c * Polynomial::linear(0.0, 1.0) - r.s * graph_.poly;
}

Polynomial Edge::y_poly() const {
    const Rotation r = graph_.rotation();
    return r.s * Polynomial::linear(0.0, 1.0) + r.c * graph_.poly;
}

Edge::Closest Edge::closest(Point q) const {
    const Point local = graph_.rotation().to_local(q);
    const Polynomial& p = graph_.poly;
    const Polynomial half_grad = Polynomial::linear(-local.x, 1.0) + p.shifted(-local.y) * p.derivative();

    Closest best{param_.lo, start(), semialg::distance(start(), q)};
    auto consider = [&](double t) {
        const Point w = point(t);
        const double d = semialg::distance(w, q);
        if (d < best.distance) best = {t, w, d};
    };
    consider(param_.hi);
    if (!half_grad.is_zero())
        for (double t : isolate_real_roots(half_grad, param_, 1e-13).values()) consider(t);
    return best;
}

double Edge::length(double tol) const {
    if (straight()) return param_.width();
    const Polynomial d = graph_.poly.derivative();
    return adaptive_simpson([&](double t) { return std::sqrt(1.0 + d(t) * d(t)); }, param_.lo, param_.hi, tol);
}

std::vector<Point> Edge::sample(int n) const {
    n = std::max(n, 1);
    std::vector<Point> out;
    out.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double t = i == n ? param_.hi : param_.lo + param_.width() * i / n;
        out.push_back(point(t));
    }
    return out;
}

std::vector<double> horizontal_hits(const Edge& e, double c) {
    const Polynomial q = e.y_poly().shifted(-c);
    if (q.is_zero()) return {};
    std::vector<double> out;
    const Interval r = e.param();
    const double eps = 1e-13 * (1.0 + r.width());
    for (double t : isolate_real_roots(q, r, 1e-13).values())
        if (t > r.lo + eps && t < r.hi - eps) out.push_back(t);
    return out;
}

int ray_crossings(const Edge& e, Point a, Point b, Point p) {
    const Box& bx = e.box();
    if (std::max({bx.xmax, a.x, b.x}) < p.x) return 0;
    if (bx.ymin >= p.y && a.y >= p.y && b.y >= p.y) return 0;
    if (bx.ymax < p.y && a.y < p.y && b.y < p.y) return 0;

    const Polynomial xs = e.x_poly();
    const Polynomial ys = e.y_poly();
    const std::vector<double> hits = horizontal_hits(e, p.y);
    const Interval r = e.param();

    // Class (above-or-on vs below) along the arc, with the positions where it may flip.
    auto cls = [&](double y) { return y >= p.y; };
    int crossings = 0;
    bool prev = cls(a.y);
    double lo = r.lo;
    for (std::size_t i = 0; i <= hits.size(); ++i) {
        const double hi = i < hits.size() ? hits[i] : r.hi;
        const bool here = cls(ys(0.5 * (lo + hi)));
        if (here != prev) {
            const double x = i == 0 ? a.x : xs(lo);
            if (x > p.x) ++crossings;
        }
        prev = here;
        lo = hi;
    }
    if (cls(b.y) != prev && b.x > p.x) ++crossings;
    return crossings;
}

}  // namespace semialg
