#include "semialg/geodesic.hpp"

#include "semialg/errors.hpp"
#include "semialg/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace semialg {

// ---------------------------------------------------------------------------
// Curves

PathPiece PathPiece::segment(Point a, Point b) {
    PathPiece p;
    p.kind = Kind::Segment;
    p.p = a;
    p.q = b;
    return p;
}

PathPiece PathPiece::arc(RotatedGraph g, double from, double to) {
    PathPiece p;
    p.kind = Kind::Arc;
    p.graph = std::move(g);
    p.from = from;
    p.to = to;
    p.p = p.graph.point_at(from);
    p.q = p.graph.point_at(to);
    return p;
}

Point PathPiece::start() const { return p; }
Point PathPiece::end() const { return q; }

Point PathPiece::at(double s) const {
    if (!is_arc()) return p + s * (q - p);
    return graph.point_at(from + s * (to - from));
}

Point PathPiece::direction(double s) const {
    Point d = is_arc() ? (to >= from ? 1.0 : -1.0) * graph.tangent_at(from + s * (to - from)) : q - p;
    const double n = norm(d);
    return n > 0.0 ? (1.0 / n) * d : d;
}

double PathPiece::length(double tol) const {
    if (!is_arc()) return distance(p, q);
    if (from == to) return 0.0;
    return Edge(graph, param()).length(tol);
}

double PiecewiseCurve::length(double tol) const {
    double total = 0.0;
    for (const PathPiece& p : pieces) total += p.length(tol);
    return total;
}

double PiecewiseCurve::continuity_gap() const {
    double gap = 0.0;
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
        gap = std::max(gap, distance(pieces[i].end(), pieces[i + 1].start()));
    return gap;
}

PiecewiseCurve PiecewiseCurve::reversed() const {
    PiecewiseCurve out;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
        PathPiece p = *it;
        std::swap(p.p, p.q);
        std::swap(p.from, p.to);
        out.pieces.push_back(p);
    }
    return out;
}

std::vector<Point> PiecewiseCurve::polyline(int per_arc) const {
    std::vector<Point> out;
    for (const PathPiece& p : pieces) {
        const int n = p.is_arc() ? per_arc : 1;
        for (int i = out.empty() ? 0 : 1; i <= n; ++i) out.push_back(p.at(static_cast<double>(i) / n));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Zigzag tangent curves

Point tangent_apex(const Polynomial& f, double a, double b, double eps) {
    const Polynomial df = f.derivative();
    const double ma = df(a);
    const double mb = df(b);
    if (std::abs(ma - mb) <= eps * (1.0 + std::abs(ma) + std::abs(mb)))
        throw Error(ErrorKind::ParallelTangents, "tangent lines are parallel");
    const double x = (f(b) - f(a) + ma * a - mb * b) / (ma - mb);
    return {x, f(a) + ma * (x - a)};
}

Point ZigzagCurve::tangent_point(int j) const {
    const double s = tangent_abscissae.at(j);
    return {s, f(s)};
}

Point ZigzagCurve::apex(int j) const { return tangent_apex(f, tangent_abscissae.at(j - 1), tangent_abscissae.at(j)); }

std::vector<Point> ZigzagCurve::polyline() const {
    std::vector<Point> out;
    if (tangent_abscissae.empty()) return out;
    out.push_back(tangent_point(0));
    for (std::size_t j = 1; j < tangent_abscissae.size(); ++j) {
        out.push_back(apex(static_cast<int>(j)));
        out.push_back(tangent_point(static_cast<int>(j)));
    }
    return out;
}

double ZigzagCurve::length() const {
    const std::vector<Point> pts = polyline();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += distance(pts[i], pts[i + 1]);
    return total;
}

int ZigzagCurve::vertex_count() const {
    return static_cast<int>(apex_count());
}

ZigzagCurve make_zigzag(const Polynomial& f, std::vector<double> abscissae) {
    std::sort(abscissae.begin(), abscissae.end());
    abscissae.erase(std::unique(abscissae.begin(), abscissae.end()), abscissae.end());
    return {f, std::move(abscissae)};
}

ZigzagCurve refine_zigzag(const ZigzagCurve& z) {
    if (z.tangent_abscissae.size() < 2) return z;
    std::vector<double> s;
    for (std::size_t j = 0; j < z.tangent_abscissae.size(); ++j) {
        if (j > 0) s.push_back(0.5 * (z.tangent_abscissae[j - 1] + z.tangent_abscissae[j]));
        s.push_back(z.tangent_abscissae[j]);
    }
    return {z.f, std::move(s)};
}

namespace {

void require_convex_up(const Polynomial& f, Interval arc) {
    const Polynomial d2 = f.derivative().derivative();
    bool ok = !d2.is_zero() && d2(arc.mid()) > 0.0;
    if (ok)
        for (double r : isolate_real_roots(d2, arc, 1e-13).values()) ok = ok && !(r > arc.lo && r < arc.hi);
    if (!ok) throw Error(ErrorKind::NotConvexIncreasing, "arc is not strictly convex upward");
}

// Geometry of tangent lines below a convex arc of f.
struct TangentKit {
    Polynomial f, df;

    double line(double s, double x) const { return f(s) + df(s) * (x - s); }
    /// Value of p relative to the tangent line at s (> 0 above).
    double side(double s, Point p) const { return p.y - line(s, p.x); }

    // Tangent point t in (p.x, hi] whose tangent line passes through p.
    double right_tangent(Point p, double hi) const {
        auto h = [&](double t) { return line(t, p.x) - p.y; };
        double lo = p.x;
        if (h(hi) >= 0.0) return hi;
        for (int i = 0; i < 200 && hi - lo > 1e-15 * (1.0 + std::abs(hi)); ++i) {
            const double m = 0.5 * (lo + hi);
            (h(m) >= 0.0 ? lo : hi) = m;
        }
        return 0.5 * (lo + hi);
    }

    // Tangent point t in [lo, p.x) whose tangent line passes through p.
    double left_tangent(Point p, double lo) const {
        auto h = [&](double t) { return line(t, p.x) - p.y; };
        double hi = p.x;
        if (h(lo) >= 0.0) return lo;
        for (int i = 0; i < 200 && hi - lo > 1e-15 * (1.0 + std::abs(hi)); ++i) {
            const double m = 0.5 * (lo + hi);
            (h(m) >= 0.0 ? hi : lo) = m;
        }
        return 0.5 * (lo + hi);
    }
};

// First point after pts[from] where the chain pts[from..] reaches the tangent
// line at s from below; returns the point and the index of the chain vertex after it.
std::pair<Point, std::size_t> first_crossing(const TangentKit& k, double s, const std::vector<Point>& pts,
                                             std::size_t from, double tol) {
    for (std::size_t i = from + 1; i < pts.size(); ++i) {
        const double v1 = k.side(s, pts[i]);
        if (v1 < -tol) continue;
        if (std::abs(v1) <= tol) return {pts[i], i + 1};
        const double v0 = k.side(s, pts[i - 1]);
        const double w = v0 / (v0 - v1);
        return {pts[i - 1] + w * (pts[i] - pts[i - 1]), i};
    }
    return {pts.back(), pts.size()};
}

}  // namespace

ZigzagCurve zigzagify(const std::vector<Point>& poly_curve, const Polynomial& f, Interval arc, const Tolerances& tol) {
    std::vector<Point> pts;
    for (Point p : poly_curve)
        if (pts.empty() || distance(pts.back(), p) > tol.eps_geom) pts.push_back(p);
    if (pts.size() < 2) return {f, {arc.lo}};
    const Point a = pts.front();
    const Point b = pts.back();
    if (std::abs(a.y - f(a.x)) > tol.eps_geom * (1.0 + std::abs(a.y)) ||
        std::abs(b.y - f(b.x)) > tol.eps_geom * (1.0 + std::abs(b.y)))
        throw Error(ErrorKind::NotBelowGraph, "endpoints must lie on the graph");
    if (!(a.x < b.x) || !arc.contains(a.x, tol.eps_geom) || !arc.contains(b.x, tol.eps_geom))
        throw Error(ErrorKind::NotConvexIncreasing, "endpoints must run left to right inside the arc");
    require_convex_up(f, {a.x, b.x});
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        for (int j = 0; j <= 32; ++j) {
            const Point q = pts[i] + (j / 32.0) * (pts[i + 1] - pts[i]);
            if (q.y - f(q.x) > tol.eps_geom * (1.0 + std::abs(q.y)))
                throw Error(ErrorKind::NotBelowGraph, "polygonal curve leaves the region below the graph");
        }

    const TangentKit k{f, f.derivative()};
    const double lt = 1e-12 * (1.0 + std::abs(b.y) + std::abs(a.y));

    // Make the curve tangent at both ends.
    if (k.side(a.x, pts[1]) < -lt) {
        auto [x, next] = first_crossing(k, a.x, pts, 1, lt);
        std::vector<Point> r{a, x};
        r.insert(r.end(), pts.begin() + static_cast<long>(std::min(next, pts.size())), pts.end());
        if (r.back() != b) r.push_back(b);
        pts = r;
    }
    if (pts.size() > 2 && k.side(b.x, pts[pts.size() - 2]) < -lt) {
        std::vector<Point> rev(pts.rbegin(), pts.rend());
        auto [x, next] = first_crossing(k, b.x, rev, 1, lt);
        std::vector<Point> r{b, x};
        r.insert(r.end(), rev.begin() + static_cast<long>(std::min(next, rev.size())), rev.end());
        if (r.back() != a) r.push_back(a);
        pts.assign(r.rbegin(), r.rend());
    }

    std::vector<double> s{a.x};
    std::vector<Point> rest(pts.begin() + 1, pts.end() - 1);
    rest.push_back(b);  // the chain always ends at b
    while (rest.size() > 2) {
        const double cur = s.back();
        const Point c = tangent_apex(f, cur, b.x);
        const Point p1 = rest[0];
        if (p1.x >= c.x - lt) break;  // the first vertex reaches the apex: cur - C - B
        const double d = k.right_tangent(p1, b.x);
        if (d >= b.x) break;
        const Point p2 = rest[1];
        const double side = k.side(d, p2);
        if (side > lt) {
            // p2 sits between the tangent at d and the graph: pivot through it instead.
            const double dl = k.left_tangent(p2, cur);
            if (dl <= cur) break;
            s.push_back(dl);
            rest.erase(rest.begin());
        } else if (side < -lt) {
            auto [x, next] = first_crossing(k, d, rest, 1, lt);
            s.push_back(d);
            std::vector<Point> r{x};
            r.insert(r.end(), rest.begin() + static_cast<long>(std::min(next, rest.size())), rest.end());
            if (r.back() != b) r.push_back(b);
            rest = r;
        } else if (p2.x > d + lt) {
            s.push_back(d);
            rest.erase(rest.begin());
        } else {
            auto [x, next] = first_crossing(k, d, rest, 1, lt);
            s.push_back(d);
            std::vector<Point> r{x};
            r.insert(r.end(), rest.begin() + static_cast<long>(std::min(next, rest.size())), rest.end());
            if (r.back() != b) r.push_back(b);
            if (r.size() >= rest.size()) r.erase(r.begin());
            rest = r;
        }
    }
    s.push_back(b.x);
    return make_zigzag(f, std::move(s));
}

TriangleGap triangle_completion_gap(const Polynomial& f, const std::vector<double>& q) {
    if (q.size() < 2 || !std::is_sorted(q.begin(), q.end()) || q.front() == q.back())
        throw Error(ErrorKind::DegenerateInterval, "partition needs two or more increasing points");
    ArcClass cls;
    try {
        cls = classify_arc(f, {q.front(), q.back()});
    } catch (const Error&) {
        throw Error(ErrorKind::NotConvexIncreasing, "arc is not convex upward and increasing");
    }
    const Polynomial df = f.derivative();
    if (!(cls == ArcClass::ConvexUpIncreasing || (cls == ArcClass::Linear && df(q.front()) >= 0.0)))
        throw Error(ErrorKind::NotConvexIncreasing, "arc is not convex upward and increasing");

    auto g = [](double m) { return m + std::sqrt(1.0 + m * m); };
    TriangleGap out;
    for (std::size_t j = 1; j < q.size(); ++j) {
        const double s0 = q[j - 1];
        const double s1 = q[j];
        const double h = s1 - s0;
        const Point a0{s0, f(s0)};
        const Point a1{s1, f(s1)};
        const double chord = distance(a0, a1);
        out.inscribed += chord;
        const double m0 = df(s0);
        const double m1 = df(s1);
        if (std::abs(m1 - m0) <= 1e-14 * (1.0 + std::abs(m0))) {
            out.zigzag += chord;
        } else {
            const Point c = tangent_apex(f, s0, s1, 0.0);
            out.zigzag += distance(a0, c) + distance(c, a1);
        }
        out.triangles += h * std::sqrt(1.0 + m1 * m1) + (f(s0) - f(s1) - m1 * (s0 - s1));
        out.g_sum += h * (g(m1) - g((f(s1) - f(s0)) / h));
    }
    out.identity_residual = std::abs((out.triangles - out.inscribed) - out.g_sum);
    return out;
}

// ---------------------------------------------------------------------------
// Snapping a discrete taut string onto tangent segments and graph arcs

namespace {

struct SnapNode {
    bool arc = false;
    Point p;  // fixed nodes
    RotatedGraph g;
    double t0 = 0.0, t1 = 0.0;  // travel order
    bool pin0 = false, pin1 = false;
    int dir = 1;

    Point start() const { return arc ? g.point_at(t0) : p; }
    Point end() const { return arc ? g.point_at(t1) : p; }
};

Point unit(Point d) {
    const double n = norm(d);
    return n > 0.0 ? (1.0 / n) * d : d;
}

bool solve_linear(std::vector<std::vector<double>> a, std::vector<double>& b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (std::abs(a[piv][c]) < 1e-300) return false;
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double m = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= m * a[c][k];
            b[r] -= m * b[c];
        }
    }
    for (std::size_t c = n; c-- > 0;) {
        for (std::size_t k = c + 1; k < n; ++k) b[c] -= a[c][k] * b[k];
        b[c] /= a[c][c];
    }
    return true;
}

struct Snapper {
    std::vector<SnapNode>& nodes;

    std::vector<double*> unknowns() {
        std::vector<double*> u;
        for (SnapNode& n : nodes) {
            if (!n.arc) continue;
            if (!n.pin0) u.push_back(&n.t0);
            if (!n.pin1) u.push_back(&n.t1);
        }
        return u;
    }

    std::vector<double> residual() const {
        std::vector<double> r;
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            const SnapNode& l = nodes[i];
            const SnapNode& rt = nodes[i + 1];
            const Point chord = rt.start() - l.end();
            if (l.arc && !l.pin1) r.push_back(cross(chord, unit(l.g.tangent_at(l.t1))));
            if (rt.arc && !rt.pin0) r.push_back(cross(chord, unit(rt.g.tangent_at(rt.t0))));
        }
        return r;
    }

    static double norm2(const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    }

    bool solve() {
        std::vector<double*> u = unknowns();
        if (u.empty()) return true;
        std::vector<double> r = residual();
        if (r.size() != u.size()) return false;
        for (int it = 0; it < 100 && norm2(r) > 1e-15; ++it) {
            const std::size_t n = u.size();
            std::vector<std::vector<double>> jac(n, std::vector<double>(n));
            for (std::size_t j = 0; j < n; ++j) {
                const double x = *u[j];
                const double h = 1e-7 * (1.0 + std::abs(x));
                *u[j] = x + h;
                const std::vector<double> rp = residual();
                *u[j] = x - h;
                const std::vector<double> rm = residual();
                *u[j] = x;
                for (std::size_t i = 0; i < n; ++i) jac[i][j] = (rp[i] - rm[i]) / (2.0 * h);
            }
            std::vector<double> dx(n);
            for (std::size_t i = 0; i < n; ++i) dx[i] = -r[i];
            if (!solve_linear(jac, dx)) break;
            std::vector<double> x0(n);
            for (std::size_t i = 0; i < n; ++i) x0[i] = *u[i];
            double lambda = 1.0;
            bool improved = false;
            for (; lambda > 1e-8; lambda *= 0.5) {
                for (std::size_t i = 0; i < n; ++i) *u[i] = x0[i] + lambda * dx[i];
                const std::vector<double> rn = residual();
                if (norm2(rn) < norm2(r)) {
                    r = rn;
                    improved = true;
                    break;
                }
            }
            if (!improved) {
                for (std::size_t i = 0; i < n; ++i) *u[i] = x0[i];
                break;
            }
        }
        return norm2(r) <= 1e-10;
    }
};

// Drops arcs that turned inside out during the solve and solves again.
void snap(std::vector<SnapNode>& nodes) {
    for (std::size_t round = 0; round <= nodes.size(); ++round) {
        Snapper s{nodes};
        const bool ok = s.solve();
        bool removed = false;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            SnapNode& n = nodes[i];
            if (!n.arc || (n.t1 - n.t0) * n.dir >= -1e-10) continue;
            if (n.pin0 || n.pin1) {
                const Point p = n.pin0 ? n.g.point_at(n.t0) : n.g.point_at(n.t1);
                n = SnapNode{};
                n.p = p;
            } else {
                nodes.erase(nodes.begin() + static_cast<long>(i));
            }
            removed = true;
            break;
        }
        if (!removed) {
            if (!ok) throw Error(ErrorKind::NonConvergence, "tangency conditions did not converge");
            return;
        }
    }
    throw Error(ErrorKind::NonConvergence, "tangency conditions did not converge");
}

void append_segment(PiecewiseCurve& c, Point a, Point b) {
    if (distance(a, b) <= 1e-12) return;
    if (!c.pieces.empty() && !c.pieces.back().is_arc()) {
        PathPiece& last = c.pieces.back();
        const Point d0 = unit(last.q - last.p);
        const Point d1 = unit(b - a);
        if (std::abs(cross(d0, d1)) < 1e-12 && dot(d0, d1) > 0.0) {
            last.q = b;
            return;
        }
    }
    c.pieces.push_back(PathPiece::segment(a, b));
}

PiecewiseCurve assemble(const std::vector<SnapNode>& nodes) {
    PiecewiseCurve c;
    Point cur = nodes.front().start();
    for (const SnapNode& n : nodes) {
        append_segment(c, cur, n.start());
        if (n.arc && std::abs(n.t1 - n.t0) > 1e-13) {
            c.pieces.push_back(PathPiece::arc(n.g, n.t0, n.t1));
        }
        cur = n.end();
    }
    if (c.pieces.empty()) c.pieces.push_back(PathPiece::segment(nodes.front().start(), nodes.back().end()));
    return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Geodesics below a graph

PiecewiseCurve geodesic_below_graph(const Polynomial& f, Point a, Point b, const Tolerances& tol) {
    auto slack = [&](Point p) { return f(p.x) - p.y; };
    for (Point p : {a, b})
        if (slack(p) < -tol.eps_geom * (1.0 + std::abs(p.y)))
            throw Error(ErrorKind::OutsideRegion, "endpoint lies above the graph");
    if (a.x > b.x) return geodesic_below_graph(f, b, a, tol).reversed();

    PiecewiseCurve line;
    line.pieces.push_back(PathPiece::segment(a, b));
    if (f.degree() <= 1 || b.x - a.x <= 1e-14) return line;

    // The chord is the answer when it stays below the graph.
    const Polynomial chord = Polynomial::linear(a.y - (b.y - a.y) / (b.x - a.x) * a.x, (b.y - a.y) / (b.x - a.x));
    const Polynomial gap = f - chord;
    double lowest = std::min(gap(a.x), gap(b.x));
    for (double t : isolate_real_roots(gap.derivative(), {a.x, b.x}, 1e-13).values()) lowest = std::min(lowest, gap(t));
    if (lowest >= -tol.eps_geom) return line;

    // Lower convex hull of the endpoints and a dense sampling of the graph.
    const int n = 4096;
    const bool pin_a = slack(a) <= tol.eps_geom * (1.0 + std::abs(a.y));
    const bool pin_b = slack(b) <= tol.eps_geom * (1.0 + std::abs(b.y));
    struct HullPt {
        Point p;
        int idx;  // sample index, -1 for a free endpoint
    };
    std::vector<HullPt> pts;
    auto xs = [&](int i) { return i == n ? b.x : a.x + (b.x - a.x) * i / n; };
    if (!pin_a) pts.push_back({a, -1});
    for (int i = pin_a ? 0 : 1; i <= (pin_b ? n : n - 1); ++i) pts.push_back({{xs(i), f(xs(i))}, i});
    if (!pin_b) pts.push_back({b, -1});
    std::vector<HullPt> hull;
    for (const HullPt& q : pts) {
        while (hull.size() >= 2 && cross(hull.back().p - hull[hull.size() - 2].p, q.p - hull.back().p) <= 0.0)
            hull.pop_back();
        hull.push_back(q);
    }

    const RotatedGraph g{f, 0.0};
    std::vector<SnapNode> nodes;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const HullPt& h = hull[i];
        if (h.idx < 0) {
            SnapNode fixed;
            fixed.p = h.p;
            nodes.push_back(fixed);
            continue;
        }
        if (!nodes.empty() && nodes.back().arc && i > 0 && hull[i - 1].idx >= 0 && hull[i - 1].idx == h.idx - 1) {
            nodes.back().t1 = xs(h.idx);
            nodes.back().pin1 = pin_b && h.idx == n;
            continue;
        }
        SnapNode arc;
        arc.arc = true;
        arc.g = g;
        arc.t0 = arc.t1 = xs(h.idx);
        arc.pin0 = pin_a && h.idx == 0;
        arc.pin1 = pin_b && h.idx == n;
        nodes.push_back(arc);
    }
    snap(nodes);
    return assemble(nodes);
}

// ---------------------------------------------------------------------------
// Geodesics inside a type-I region

namespace {

struct PolyVertex {
    Point p;
    int comp = 0;
    int side = 0;
    int k = 0;  // sample index along the side, 0 at its start vertex
    double t = 0.0;
    bool reflex = false;
};

struct RegionPolygon {
    std::vector<PolyVertex> v;
    std::vector<std::pair<int, int>> edges;
    double scale = 1.0;
    double slack = 0.0;  ///< how far chords stray from the true sides

    bool inside(Point q) const {
        bool odd = false;
        double best = 1e300;
        for (auto [i, j] : edges) {
            const Point a = v[i].p;
            const Point b = v[j].p;
            if ((a.y > q.y) != (b.y > q.y)) {
                const double x = a.x + (q.y - a.y) / (b.y - a.y) * (b.x - a.x);
                if (x > q.x) odd = !odd;
            }
            const Point ab = b - a;
            const double len2 = dot(ab, ab);
            const double w = len2 > 0.0 ? std::clamp(dot(q - a, ab) / len2, 0.0, 1.0) : 0.0;
            best = std::min(best, distance(q, a + w * ab));
        }
        return odd || best <= slack + 1e-9 * scale;
    }

    bool visible(Point p, int ip, Point q, int iq) const {
        const double eps = 1e-13 * scale * scale;
        const Box seg{std::min(p.x, q.x), std::max(p.x, q.x), std::min(p.y, q.y), std::max(p.y, q.y)};
        for (auto [i, j] : edges) {
            if (i == ip || j == ip || i == iq || j == iq) continue;
            const Point a = v[i].p;
            const Point b = v[j].p;
            if (std::max(a.x, b.x) < seg.xmin || std::min(a.x, b.x) > seg.xmax || std::max(a.y, b.y) < seg.ymin ||
                std::min(a.y, b.y) > seg.ymax)
                continue;
            const double o1 = cross(q - p, a - p);
            const double o2 = cross(q - p, b - p);
            const double o3 = cross(b - a, p - a);
            const double o4 = cross(b - a, q - a);
            if (((o1 > eps && o2 < -eps) || (o1 < -eps && o2 > eps)) &&
                ((o3 > eps && o4 < -eps) || (o3 < -eps && o4 > eps)))
                return false;
        }
        for (double w : {0.125, 0.375, 0.5, 0.625, 0.875})
            if (!inside(p + w * (q - p))) return false;
        return true;
    }
};

RegionPolygon sample_region(const TypeIRegion& t, int per_side) {
    RegionPolygon poly;
    const Box bx = t.box();
    poly.scale = 1.0 + bx.diameter();
    for (std::size_t c = 0; c < t.boundary_components.size(); ++c) {
        const auto& comp = t.boundary_components[c];
        const int first = static_cast<int>(poly.v.size());
        for (std::size_t s = 0; s < comp.size(); ++s) {
            const Side& side = comp[s];
            const Interval r = side.edge.param();
            const int m = side.edge.straight() ? 1 : per_side;
            for (int k = 0; k < m; ++k) {
                const double t_k = side.forward ? r.lo + r.width() * k / m : r.hi - r.width() * k / m;
                const Point p = k == 0 ? side.start() : side.edge.point(t_k);
                if (m > 1) {
                    const double t_n = side.forward ? t_k + r.width() / m : t_k - r.width() / m;
                    const Point q = side.edge.point(t_n);
                    const Point mid = side.edge.point(0.5 * (t_k + t_n));
                    poly.slack = std::max(poly.slack, 2.0 * norm(mid - 0.5 * (p + q)));
                }
                poly.v.push_back({p, static_cast<int>(c), static_cast<int>(s), k, t_k, false});
            }
        }
        const int last = static_cast<int>(poly.v.size());
        for (int i = first; i < last; ++i) {
            const int prev = i == first ? last - 1 : i - 1;
            const int next = i + 1 == last ? first : i + 1;
            poly.edges.push_back({i, next});
            const double turn = cross(poly.v[i].p - poly.v[prev].p, poly.v[next].p - poly.v[i].p);
            poly.v[i].reflex = turn < -1e-15 * poly.scale * poly.scale;
        }
    }
    return poly;
}

// Graph of a side in the frame that puts the region below it; `flip` tells whether t maps to -t.
std::pair<RotatedGraph, bool> region_below_frame(const Side& side) {
    const RotatedGraph& g = side.edge.graph();
    const double tm = side.edge.param().mid();
    const Point d = (side.forward ? 1.0 : -1.0) * unit(g.tangent_at(tm));
    const Point inward{-d.y, d.x};
    const Point q = g.point_at(tm) + 1e-6 * inward;
    if (membership(g, q) >= 0.0) return {g, false};
    return {flipped(g), true};
}

}  // namespace

PiecewiseCurve geodesic_in_region(const TypeIRegion& t, Point a, Point b, const Tolerances& tol) {
    for (Point p : {a, b})
        if (!t.contains(p, std::max(tol.eps_geom, 1e-9))) throw Error(ErrorKind::OutsideRegion, "endpoint outside the region");

    const RegionPolygon poly = sample_region(t, 256);
    const int na = -2, nb = -3;  // ids for a and b among the search nodes
    std::vector<int> nodes{na, nb};
    for (std::size_t i = 0; i < poly.v.size(); ++i)
        if (poly.v[i].reflex) nodes.push_back(static_cast<int>(i));
    auto point_of = [&](int id) { return id == na ? a : id == nb ? b : poly.v[id].p; };

    // A* over the visibility graph.
    const std::size_t n = nodes.size();
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<int> prev(n, -1);
    std::vector<char> done(n, 0);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
    dist[0] = 0.0;
    open.push({distance(a, b), 0});
    while (!open.empty()) {
        const std::size_t u = open.top().second;
        open.pop();
        if (done[u]) continue;
        done[u] = 1;
        if (u == 1) break;
        const Point pu = point_of(nodes[u]);
        for (std::size_t w = 0; w < n; ++w) {
            if (done[w]) continue;
            const Point pw = point_of(nodes[w]);
            const double nd = dist[u] + distance(pu, pw);
            if (nd >= dist[w]) continue;
            if (!poly.visible(pu, nodes[u] >= 0 ? nodes[u] : -1, pw, nodes[w] >= 0 ? nodes[w] : -1)) continue;
            dist[w] = nd;
            prev[w] = static_cast<int>(u);
            open.push({nd + distance(pw, b), w});
        }
    }
    if (!done[1]) throw Error(ErrorKind::Disconnected, "no path between the endpoints inside the region");

    std::vector<int> path;
    for (int u = 1; u >= 0; u = prev[u]) path.push_back(nodes[u]);
    std::reverse(path.begin(), path.end());

    // Group consecutive samples of one curved side into arcs.
    std::vector<SnapNode> snap_nodes;
    SnapNode start;
    start.p = a;
    snap_nodes.push_back(start);
    int last_vertex = -1;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        const PolyVertex& pv = poly.v[path[i]];
        const Side& side = t.boundary_components[pv.comp][pv.side];
        if (pv.k == 0 || side.edge.straight()) {
            SnapNode fixed;
            fixed.p = pv.p;
            snap_nodes.push_back(fixed);
            last_vertex = -1;
            continue;
        }
        const auto [g, flip] = region_below_frame(side);
        const double tt = flip ? -pv.t : pv.t;
        if (last_vertex >= 0 && snap_nodes.back().arc) {
            const PolyVertex& lv = poly.v[last_vertex];
            // The string may hop over samples where the side is nearly flat; it
            // still hugs the side if everything skipped bulges into the region.
            bool hugging = lv.comp == pv.comp && lv.side == pv.side;
            for (int j = std::min(last_vertex, path[i]) + 1; hugging && j < std::max(last_vertex, path[i]); ++j)
                hugging = poly.v[j].reflex && poly.v[j].side == pv.side;
            if (hugging) {
                snap_nodes.back().t1 = tt;
                snap_nodes.back().dir = tt >= snap_nodes.back().t0 ? 1 : -1;
                last_vertex = path[i];
                continue;
            }
        }
        SnapNode arc;
        arc.arc = true;
        arc.g = g;
        arc.t0 = arc.t1 = tt;
        const Point before = i > 0 ? (path[i - 1] >= 0 ? poly.v[path[i - 1]].p : a) : a;
        const Point after = path[i + 1] >= 0 ? poly.v[path[i + 1]].p : b;
        arc.dir = dot(g.tangent_at(tt), after - before) >= 0.0 ? 1 : -1;
        snap_nodes.push_back(arc);
        last_vertex = path[i];
    }
    SnapNode end;
    end.p = b;
    snap_nodes.push_back(end);

    // Endpoints sitting on the arc they start or finish with become pinned ends of it.
    auto pin = [&](bool front) {
        if (snap_nodes.size() < 2) return;
        SnapNode& arc = snap_nodes[front ? 1 : snap_nodes.size() - 2];
        const Point p = front ? a : b;
        if (!arc.arc) return;
        const double tp = arc.g.local_u(p);
        if (std::abs(membership(arc.g, p)) > 1e-9 * (1.0 + norm(p))) return;
        if (front) {
            arc.t0 = tp;
            arc.pin0 = true;
            snap_nodes.erase(snap_nodes.begin());
        } else {
            arc.t1 = tp;
            arc.pin1 = true;
            snap_nodes.pop_back();
        }
        arc.dir = arc.t1 >= arc.t0 ? 1 : -1;
    };
    pin(true);
    pin(false);
    snap(snap_nodes);
    return assemble(snap_nodes);
}

// ---------------------------------------------------------------------------
// Structure

StructureReport geodesic_structure(const PiecewiseCurve& c) {
    StructureReport rep;
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
        const PathPiece& p = c.pieces[i];
        if (i + 1 < c.pieces.size()) {
            const PathPiece& q = c.pieces[i + 1];
            if (p.is_arc() == q.is_arc()) rep.alternates = false;
            rep.tangency_residual = std::max(rep.tangency_residual, norm(p.direction(1.0) - q.direction(0.0)));
        }
        if (!p.is_arc()) continue;
        const Interval r = p.param();
        const Polynomial& f = p.graph.poly;
        std::vector<double> cuts{r.lo};
        for (double x : profile_breakpoints(critical_profile(f, r)))
            if (x > r.lo && x < r.hi) cuts.push_back(x);
        cuts.push_back(r.hi);
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            if (cuts[k + 1] - cuts[k] <= 1e-12) continue;
            try {
                const ArcClass cls = classify_arc(f, {cuts[k], cuts[k + 1]});
                if (cls != ArcClass::ConvexUpIncreasing && cls != ArcClass::ConvexUpDecreasing) rep.arcs_convex_up = false;
            } catch (const Error&) {
                rep.arcs_convex_up = false;
            }
        }
    }
    return rep;
}

}  // namespace semialg
