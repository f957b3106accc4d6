#include "semialg/cells.hpp"

#include "semialg/errors.hpp"
#include "semialg/features.hpp"

#include <algorithm>
#include <cmath>

namespace semialg {

// ---------------------------------------------------------------------------
// CellComplex

CellComplex::CellComplex(Arrangement arr, std::vector<char> vmember, std::vector<char> emember,
                         std::vector<char> fmember)
    : arr_(std::move(arr)) {
    member_[0] = std::move(vmember);
    member_[1] = std::move(emember);
    member_[2] = std::move(fmember);
    compute_clipped();
}

CellComplex CellComplex::from_mask(Arrangement arr, const Mask& mask) {
    std::vector<char> vm, em, fm;
    for (const auto& v : arr.vertices()) vm.push_back(mask(v.p));
    for (const auto& e : arr.edges()) em.push_back(mask(e.geom.midpoint()));
    for (const auto& f : arr.faces()) fm.push_back(mask(f.interior));
    return CellComplex(std::move(arr), std::move(vm), std::move(em), std::move(fm));
}

void CellComplex::compute_clipped() {
    const auto& vs = arr_.vertices();
    const auto& es = arr_.edges();
    const auto& fs = arr_.faces();
    clipped_[0].assign(vs.size(), 0);
    clipped_[1].assign(es.size(), 0);
    clipped_[2].assign(fs.size(), 0);
    for (std::size_t e = 0; e < es.size(); ++e) {
        if (!es[e].synthetic || !member_[1][e]) continue;
        clipped_[0][es[e].v0] = 1;
        clipped_[0][es[e].v1] = 1;
    }
    for (std::size_t e = 0; e < es.size(); ++e)
        clipped_[1][e] = es[e].synthetic || clipped_[0][es[e].v0] || clipped_[0][es[e].v1];
    for (std::size_t f = 0; f < fs.size(); ++f)
        for (const auto& cyc : fs[f].cycles)
            for (const auto& s : cyc)
                if (es[s.edge].synthetic) clipped_[2][f] = 1;
}

void CellComplex::mark_clipped_vertex(int v) {
    clipped_[0][v] = 1;
    const auto& es = arr_.edges();
    for (std::size_t e = 0; e < es.size(); ++e)
        if (es[e].v0 == v || es[e].v1 == v) clipped_[1][e] = 1;
}

int CellComplex::id_of(int dim, int index) const {
    const int nv = static_cast<int>(arr_.vertices().size());
    const int ne = static_cast<int>(arr_.edges().size());
    return dim == 0 ? index : dim == 1 ? nv + index : nv + ne + index;
}

std::pair<int, int> CellComplex::element_of(int id) const {
    const int nv = static_cast<int>(arr_.vertices().size());
    const int ne = static_cast<int>(arr_.edges().size());
    if (id < nv) return {0, id};
    if (id < nv + ne) return {1, id - nv};
    return {2, id - nv - ne};
}

std::vector<Cell> CellComplex::cells() const {
    std::vector<Cell> out;
    for (int d = 0; d < 3; ++d)
        for (std::size_t i = 0; i < member_[d].size(); ++i)
            if (member_[d][i]) out.push_back({id_of(d, static_cast<int>(i)), d, clipped_[d][i] != 0});
    return out;
}

std::size_t CellComplex::count(int dim, bool include_clipped) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < member_[dim].size(); ++i)
        if (member_[dim][i] && (include_clipped || !clipped_[dim][i])) ++n;
    return n;
}

std::vector<int> CellComplex::boundary(int id) const {
    const auto [dim, index] = element_of(id);
    std::vector<int> out;
    const auto& es = arr_.edges();
    auto add_edge = [&](int e) {
        if (member_[1][e]) out.push_back(id_of(1, e));
        for (int v : {es[e].v0, es[e].v1})
            if (member_[0][v]) out.push_back(id_of(0, v));
    };
    if (dim == 1) {
        for (int v : {es[index].v0, es[index].v1})
            if (member_[0][v]) out.push_back(id_of(0, v));
    } else if (dim == 2) {
        for (const auto& cyc : arr_.faces()[index].cycles)
            for (const auto& s : cyc) add_edge(s.edge);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<int> CellComplex::locate(Point p) const {
    const Arrangement::Location loc = arr_.locate(p);
    if (!loc.found() || !member_[loc.dim][loc.index]) return std::nullopt;
    return id_of(loc.dim, loc.index);
}

std::vector<EdgeSource> CellComplex::edge_sources() const {
    std::vector<EdgeSource> out;
    for (const auto& e : arr_.edges())
        if (!e.synthetic) out.push_back({e.geom, e.tags.empty() ? -1 : e.tags.front(), false});
    return out;
}

std::vector<Point> CellComplex::isolated_points() const {
    std::vector<int> degree(arr_.vertices().size(), 0);
    for (const auto& e : arr_.edges()) {
        ++degree[e.v0];
        ++degree[e.v1];
    }
    std::vector<Point> out;
    for (std::size_t v = 0; v < degree.size(); ++v)
        if (degree[v] == 0 && member_[0][v]) out.push_back(arr_.vertices()[v].p);
    return out;
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

enum Tag { kGraph = 0, kRay = 1, kRung = 2, kCopy = 3, kGrid = 4, kCurve = 5 };

double max_on(const Polynomial& f, Interval r) {
    double m = std::max(f(r.lo), f(r.hi));
    const Polynomial d = f.derivative();
    if (!d.is_zero())
        for (double t : isolate_real_roots(d, r).values()) m = std::max(m, f(t));
    return m;
}

double min_on(const Polynomial& f, Interval r) { return -max_on(-1.0 * f, r); }

std::vector<double> dedupe(std::vector<double> xs, double tol) {
    std::sort(xs.begin(), xs.end());
    std::vector<double> out;
    for (double x : xs)
        if (out.empty() || x - out.back() > tol) out.push_back(x);
    return out;
}

// Edges of the brick or stacked pattern below y = f(x), within the local box L.
std::vector<EdgeSource> halfplane_plan(const Polynomial& f, const Box& L, double s, bool open, double resolution,
                                       double tol) {
    std::vector<EdgeSource> out;
    const Interval span{L.xmin, L.xmax};
    const RotatedGraph graph{f, 0.0};
    out.push_back({Edge(graph, span), kGraph});

    std::vector<double> xs;
    for (double k = std::ceil(L.xmin / s - 1e-12); k * s <= L.xmax + tol; k += 1.0) xs.push_back(k * s);
    const bool curved = f.degree() >= 2;
    if (curved) {
        const CriticalProfile prof = critical_profile(f, span);
        for (double x : prof.strict_inflections)
            if (x > L.xmin + tol && x < L.xmax - tol) xs.push_back(x);
        for (double x : prof.local_minima)
            if (x > L.xmin + tol && x < L.xmax - tol) xs.push_back(x);
    }
    // Near-coincident abscissae collapse to one 0-cell.
    xs = dedupe(std::move(xs), tol);

    for (double x : xs) {
        const double y = f(x);
        if (y > L.ymin) out.push_back({Edge::segment({x, y}, {x, L.ymin}), kRay});
    }

    std::vector<double> cols{L.xmin};
    for (double x : xs) cols.push_back(x);
    cols.push_back(L.xmax);
    cols = dedupe(std::move(cols), tol);

    if (curved) {
        for (std::size_t c = 0; c + 1 < cols.size(); ++c) {
            const double a = cols[c];
            const double b = cols[c + 1];
            const double m = std::min(f(a), f(b));
            for (double j = std::max(1.0, std::floor((m - L.ymax) / s)); m - j * s >= L.ymin - tol; j += 1.0) {
                const double y = m - j * s;
                out.push_back({Edge::segment({a, y}, {b, y}), kRung});
            }
        }
    } else {
        const double lo = min_on(f, span);
        const double hi = max_on(f, span);
        for (double j = std::max(1.0, std::floor((lo - L.ymax) / s)); hi - j * s >= L.ymin - tol; j += 1.0)
            out.push_back({Edge(RotatedGraph{f.shifted(-j * s), 0.0}, span), kRung});
    }

    if (open) {
        for (std::size_t c = 0; c + 1 < cols.size(); ++c) {
            const Interval col{cols[c], cols[c + 1]};
            for (double d = s / 2.0; d >= resolution; d /= 2.0)
                out.push_back({Edge(RotatedGraph{f.shifted(-d), 0.0}, col), kCopy});
        }
    }
    return out;
}

Box local_box(const Box& window, Rotation r) {
    const std::vector<Point> c = window.corners();
    Box b = Box::around(r.to_local(c[0]));
    for (Point p : c) b.include(r.to_local(p));
    return b;
}

EdgeSource rotated(const EdgeSource& e, double theta) {
    return {Edge(RotatedGraph{e.edge.graph().poly, normalize_angle(e.edge.graph().theta + theta)}, e.edge.param()),
            e.tag, e.synthetic};
}

void check_not_above(const Polynomial& f, const Box& window) {
    if (max_on(f, {window.xmin, window.xmax}) < window.ymin)
        throw Error(ErrorKind::EmptyWindow, "window lies strictly above the graph");
}

}  // namespace

CellComplex halfplane_decomposition(const RotatedGraph& g, bool strict, const Box& window, double spacing,
                                    double resolution, double tol) {
    if (!(spacing > 0)) throw Error(ErrorKind::ValidationError, "spacing must be positive");
    const double theta = normalize_angle(g.theta);
    std::vector<EdgeSource> edges;
    if (theta == 0.0) {
        check_not_above(g.poly, window);
        edges = halfplane_plan(g.poly, window, spacing, strict, resolution, tol);
    } else {
        const Box L = local_box(window, g.rotation()).expanded(tol);
        for (const EdgeSource& e : halfplane_plan(g.poly, L, spacing, strict, resolution, tol))
            edges.push_back(rotated(e, theta));
    }
    Arrangement arr = Arrangement::build(edges, {}, window, tol);
    const RotatedGraph gg{g.poly, theta};
    if (strict) return CellComplex::from_mask(std::move(arr), [&](Point p) { return membership(gg, p) > tol; });
    return CellComplex::from_mask(std::move(arr), [&](Point p) { return membership(gg, p) >= -tol; });
}

CellComplex brick_decomposition(const Polynomial& f, const Box& window, double spacing, double tol) {
    return halfplane_decomposition(RotatedGraph{f, 0.0}, false, window, spacing, 1e-4, tol);
}

CellComplex open_halfplane_decomposition(const Polynomial& f, const Box& window, double spacing, double resolution,
                                         double tol) {
    return halfplane_decomposition(RotatedGraph{f, 0.0}, true, window, spacing, resolution, tol);
}

const char* to_string(CurveKind k) {
    switch (k) {
    case CurveKind::Whole: return "whole";
    case CurveKind::HalfOpen: return "half-open";
    case CurveKind::Bounded: return "bounded";
    }
    return "unknown";
}

bool CurveSpan::contains(double t) const {
    switch (kind) {
    case CurveKind::Whole: return true;
    case CurveKind::HalfOpen: return direction > 0 ? t > x0 : t < x0;
    case CurveKind::Bounded: return t > x0 && t < x1;
    }
    return false;
}

CellComplex open_curve_decomposition(const RotatedGraph& g, const CurveSpan& span, Interval window,
                                     double resolution, double tol) {
    if (span.kind == CurveKind::Bounded && !(span.x1 > span.x0))
        throw Error(ErrorKind::DegenerateInterval, "bounded curve needs x0 < x1");

    double lo = window.lo;
    double hi = window.hi;
    std::vector<double> marks;
    auto integers_in = [&](double a, double b, bool strict) {
        for (double k = std::ceil(a); k <= b; k += 1.0)
            if (!strict || (k > a && k < b)) marks.push_back(k);
    };
    switch (span.kind) {
    case CurveKind::Whole: integers_in(lo, hi, false); break;
    case CurveKind::HalfOpen: {
        const double d = span.direction > 0 ? 1.0 : -1.0;
        if (d > 0) lo = std::max(lo, span.x0);
        else hi = std::min(hi, span.x0);
        for (double m = 1.0; std::abs(m) <= (hi - lo) + 1.0; m += 1.0) marks.push_back(span.x0 + d * m);
        for (double h = 0.5; h >= resolution; h /= 2.0) marks.push_back(span.x0 + d * h);
        break;
    }
    case CurveKind::Bounded: {
        lo = std::max(lo, span.x0);
        hi = std::min(hi, span.x1);
        for (double k = std::floor(span.x0) + 1.0; k < span.x1; k += 1.0)
            if (k > span.x0 && k >= lo && k <= hi) marks.push_back(k);
        double h = 0.5;
        while (2.0 * h >= span.x1 - span.x0) h /= 2.0;
        for (; h >= resolution; h /= 2.0) {
            marks.push_back(span.x0 + h);
            marks.push_back(span.x1 - h);
        }
        break;
    }
    }
    if (!(hi > lo)) return CellComplex(Arrangement::build({}, {}, {lo, lo, 0, 0}, tol, false), {}, {}, {});

    std::vector<double> inside;
    for (double m : marks)
        if (m >= lo - tol && m <= hi + tol && span.contains(m)) inside.push_back(std::clamp(m, lo, hi));
    inside = dedupe(std::move(inside), tol);
    std::vector<double> ts = inside;
    ts.push_back(lo);
    ts.push_back(hi);
    ts = dedupe(std::move(ts), tol);

    std::vector<EdgeSource> edges;
    Box box = Box::around(g.point_at(lo));
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        Edge e(g, {ts[i], ts[i + 1]});
        box.include({e.box().xmin, e.box().ymin});
        box.include({e.box().xmax, e.box().ymax});
        edges.push_back({std::move(e), kCurve});
    }
    std::vector<Point> points;
    if (ts.size() == 1) points.push_back(g.point_at(ts[0]));
    Arrangement arr = Arrangement::build(edges, points, box.expanded(1.0), tol, false);

    auto param_of = [&](Point p) { return g.local_u(p); };
    auto is_mark = [&](double t) {
        for (double m : inside)
            if (std::abs(m - t) <= tol) return true;
        return false;
    };
    auto strictly_inside = [&](double t) {
        switch (span.kind) {
        case CurveKind::Whole: return true;
        case CurveKind::HalfOpen: return (span.direction > 0 ? t - span.x0 : span.x0 - t) > tol;
        case CurveKind::Bounded: return t > span.x0 + tol && t < span.x1 - tol;
        }
        return false;
    };
    CellComplex c = CellComplex::from_mask(std::move(arr), [&](Point p) {
        const double t = param_of(p);
        return strictly_inside(t) && t >= lo - tol && t <= hi + tol;
    });
    const auto& vs = c.arrangement().vertices();
    for (std::size_t v = 0; v < vs.size(); ++v) {
        const double t = param_of(vs[v].p);
        if (c.member(0, static_cast<int>(v)) && !is_mark(t)) c.mark_clipped_vertex(static_cast<int>(v));
    }
    return c;
}

CellComplex grid_decomposition(const Box& window, double spacing, Point origin, double tol) {
    std::vector<EdgeSource> edges;
    for (double k = std::ceil((window.xmin - origin.x) / spacing - 1e-12); origin.x + k * spacing <= window.xmax + tol;
         k += 1.0) {
        const double x = origin.x + k * spacing;
        edges.push_back({Edge::segment({x, window.ymin}, {x, window.ymax}), kGrid});
    }
    for (double k = std::ceil((window.ymin - origin.y) / spacing - 1e-12); origin.y + k * spacing <= window.ymax + tol;
         k += 1.0) {
        const double y = origin.y + k * spacing;
        edges.push_back({Edge::segment({window.xmin, y}, {window.xmax, y}), kGrid});
    }
    return CellComplex::from_mask(Arrangement::build(edges, {}, window, tol), [](Point) { return true; });
}

CellComplex overlay(const CellComplex& a, const CellComplex& b, const Mask& region_mask) {
    const Box& wa = a.window();
    const Box& wb = b.window();
    const double slack = 1e-12 * (1.0 + wa.diameter());
    if (std::abs(wa.xmin - wb.xmin) > slack || std::abs(wa.xmax - wb.xmax) > slack ||
        std::abs(wa.ymin - wb.ymin) > slack || std::abs(wa.ymax - wb.ymax) > slack)
        throw Error(ErrorKind::WindowMismatch, "overlay needs complexes on the same window");
    std::vector<EdgeSource> edges = a.edge_sources();
    for (EdgeSource& e : b.edge_sources()) edges.push_back(std::move(e));
    std::vector<Point> points = a.isolated_points();
    for (Point p : b.isolated_points()) points.push_back(p);
    const double tol = std::max(a.tol(), b.tol());
    return CellComplex::from_mask(Arrangement::build(edges, points, wa, tol),
                                  [&](Point p) { return region_mask(p) && a.contains(p) && b.contains(p); });
}

CellComplex rewindow(const CellComplex& c, const Box& window, const Mask& mask) {
    return CellComplex::from_mask(Arrangement::build(c.edge_sources(), c.isolated_points(), window, c.tol()),
                                  [&](Point p) { return mask(p) && c.contains(p); });
}

// ---------------------------------------------------------------------------
// Checks

namespace {

// Independent brute-force attribution: every element is tested, no search index.
std::vector<Arrangement::Location> owners(const Arrangement& arr, Point p) {
    std::vector<Arrangement::Location> out;
    const double tol = arr.tol();
    for (std::size_t v = 0; v < arr.vertices().size(); ++v)
        if (distance(arr.vertices()[v].p, p) <= tol) out.push_back({0, static_cast<int>(v)});
    if (!out.empty()) return out;
    for (std::size_t e = 0; e < arr.edges().size(); ++e)
        if (arr.edges()[e].geom.box().contains(p, tol) && arr.edges()[e].geom.distance(p) <= tol)
            out.push_back({1, static_cast<int>(e)});
    if (!out.empty()) return out;
    for (std::size_t f = 0; f < arr.faces().size(); ++f)
        if (arr.face_contains(static_cast<int>(f), p)) out.push_back({2, static_cast<int>(f)});
    return out;
}

}  // namespace

PartitionReport partition_check(const CellComplex& c, const Mask& set, int samples, std::uint64_t seed) {
    PartitionReport rep;
    std::mt19937_64 rng(seed);
    const Box& w = c.window();
    std::uniform_real_distribution<double> ux(w.xmin, w.xmax);
    std::uniform_real_distribution<double> uy(w.ymin, w.ymax);
    const bool has_faces = !c.arrangement().faces().empty();
    for (int i = 0; i < samples; ++i) {
        const Point p{ux(rng), uy(rng)};
        ++rep.samples;
        const bool in = set(p);
        rep.in_set += in;
        const auto own = owners(c.arrangement(), p);
        bool bad = own.size() > 1 || (own.empty() && (has_faces || in));
        if (!bad && own.size() == 1) {
            bad = c.member(own[0].dim, own[0].index) != in;
            bad = bad || c.arrangement().locate(p) != own[0];
        }
        if (bad) {
            ++rep.violations;
            if (rep.witnesses.size() < 8) rep.witnesses.push_back(p);
        }
    }
    return rep;
}

PartitionReport closure_check(const CellComplex& c, int per_edge) {
    PartitionReport rep;
    const Arrangement& arr = c.arrangement();
    for (std::size_t f = 0; f < arr.faces().size(); ++f) {
        if (!c.member(2, static_cast<int>(f))) continue;
        for (const auto& cyc : arr.faces()[f].cycles)
            for (const auto& s : cyc) {
                const Edge& e = arr.edges()[s.edge].geom;
                for (int k = 0; k <= per_edge; ++k) {
                    const double t = e.param().lo + e.param().width() * k / per_edge;
                    const Point p = k == 0 ? arr.side_start({s.edge, true}) : k == per_edge ? arr.side_end({s.edge, true}) : e.point(t);
                    ++rep.samples;
                    const Arrangement::Location loc = arr.locate(p);
                    if (!loc.found() || loc.dim == 2) {
                        ++rep.violations;
                        if (rep.witnesses.size() < 8) rep.witnesses.push_back(p);
                    }
                }
            }
    }
    return rep;
}

}  // namespace semialg
