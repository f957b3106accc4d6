#include "semialg/regions.hpp"

#include "semialg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace semialg {

// ---------------------------------------------------------------------------
// TypeIRegion

Box TypeIRegion::box() const {
    Box b = Box::around(boundary_components.at(0).at(0).start());
    for (const Side& s : boundary_components[0]) {
        b.include({s.edge.box().xmin, s.edge.box().ymin});
        b.include({s.edge.box().xmax, s.edge.box().ymax});
    }
    return b;
}

double TypeIRegion::boundary_distance(Point p) const {
    double best = 1e300;
    for (const auto& comp : boundary_components)
        for (const Side& s : comp) {
            const Box& b = s.edge.box();
            const double dx = std::max({b.xmin - p.x, 0.0, p.x - b.xmax});
            const double dy = std::max({b.ymin - p.y, 0.0, p.y - b.ymax});
            if (std::hypot(dx, dy) >= best) continue;
            best = std::min(best, s.edge.distance(p));
        }
    return best;
}

namespace {

bool parity_inside(const TypeIRegion& r, Point p) {
    int crossings = 0;
    for (const auto& comp : r.boundary_components)
        for (const Side& s : comp) crossings += ray_crossings(s.edge, s.at_lo, s.at_hi, p);
    return crossings % 2 == 1;
}

}  // namespace

bool TypeIRegion::interior_contains(Point p, double tol) const {
    if (boundary_components.empty()) return false;
    if (!box().contains(p, tol)) return false;
    return parity_inside(*this, p) && boundary_distance(p) > tol;
}

bool TypeIRegion::contains(Point p, double tol) const {
    if (boundary_components.empty()) return false;
    if (!box().contains(p, tol)) return false;
    if (!closed) return interior_contains(p, tol);
    return parity_inside(*this, p) || boundary_distance(p) <= tol;
}

double TypeIRegion::area() const {
    double a = 0.0;
    for (const auto& comp : boundary_components)
        for (const Side& s : comp) {
            std::vector<Point> pts = s.edge.straight() ? std::vector<Point>{s.at_lo, s.at_hi} : s.edge.sample(32);
            pts.front() = s.at_lo;
            pts.back() = s.at_hi;
            if (!s.forward) std::reverse(pts.begin(), pts.end());
            for (std::size_t i = 0; i + 1 < pts.size(); ++i) a += cross(pts[i], pts[i + 1]);
        }
    return 0.5 * a;
}

// ---------------------------------------------------------------------------
// Construction helpers

namespace {

bool same_arc_graph(const Edge& a, const Edge& b) {
    return a.graph().theta == b.graph().theta && a.graph().poly == b.graph().poly;
}

// Joins consecutive sides lying on the same graph by dropping the vertex between them.
void merge_cograph(TypeIRegion& r) {
    for (auto& comp : r.boundary_components) {
        bool changed = true;
        while (changed && comp.size() > 2) {
            changed = false;
            for (std::size_t i = 0; i < comp.size(); ++i) {
                const std::size_t j = (i + 1) % comp.size();
                Side& a = comp[i];
                const Side& b = comp[j];
                if (a.synthetic != b.synthetic || a.forward != b.forward) continue;
                if (!a.synthetic && a.source != b.source) continue;
                if (!same_arc_graph(a.edge, b.edge)) continue;
                Side m = a;
                if (a.forward) {
                    m.edge = a.edge.sub(a.edge.param().lo, b.edge.param().hi);
                    m.at_hi = b.at_hi;
                } else {
                    m.edge = a.edge.sub(b.edge.param().lo, a.edge.param().hi);
                    m.at_lo = b.at_lo;
                }
                if (!(m.edge.param().hi > m.edge.param().lo)) continue;
                comp[i] = m;
                comp.erase(comp.begin() + static_cast<long>(j));
                changed = true;
                break;
            }
        }
    }
    r.vertices.clear();
    for (const auto& comp : r.boundary_components)
        for (const Side& s : comp) r.vertices.push_back(s.start());
}

Interval local_span(const RotatedGraph& g, const Box& window) {
    const Rotation rot = g.rotation();
    double lo = 1e300, hi = -1e300;
    for (Point c : window.corners()) {
        const double u = rot.to_local(c).x;
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    return {lo - 1.0, hi + 1.0};
}

// Point just on the positive side of g, near its local origin within the window.
bool same_side(const RotatedGraph& a, const RotatedGraph& b, const Box& window) {
    const Interval span = local_span(a, window);
    for (double frac : {0.5, 0.3, 0.7, 0.1, 0.9}) {
        const double t = span.lo + frac * span.width();
        const Point q = a.rotation().to_world({t, a.poly(t) - 1e-3});
        const double m = membership(b, q);
        if (std::abs(m) > 1e-9) return m > 0.0;
    }
    return true;
}

std::string fmt_point(Point p) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.9g, %.9g)", p.x, p.y);
    return buf;
}

}  // namespace

TypeIRegion region_of_face(const Arrangement& arr, int face) {
    TypeIRegion r;
    const Arrangement::Face& f = arr.faces()[face];
    for (const auto& cyc : f.cycles) {
        std::vector<Side> comp;
        for (const auto& s : cyc) {
            const auto& e = arr.edges()[s.edge];
            Side side;
            side.edge = e.geom;
            side.forward = s.forward;
            side.synthetic = e.synthetic;
            side.source = e.synthetic || e.tags.empty() ? -1 : e.tags.front();
            side.at_lo = arr.vertices()[e.v0].p;
            side.at_hi = arr.vertices()[e.v1].p;
            comp.push_back(side);
        }
        r.boundary_components.push_back(std::move(comp));
    }
    r.interior = f.interior;
    merge_cograph(r);
    return r;
}

TypeIRegion window_region(const Box& window) {
    const Arrangement arr = Arrangement::build({}, {}, window, 1e-9);
    return region_of_face(arr, 0);
}

std::vector<SplitRegion> split_region_by_graph(const TypeIRegion& t, const RotatedGraph& g, const Box& window,
                                               int source, double tol) {
    std::vector<EdgeSource> edges;
    for (const auto& comp : t.boundary_components)
        for (const Side& s : comp) {
            if (!s.synthetic && same_graph(s.edge.graph(), g))
                throw Error(ErrorKind::OverlapSide, "graph runs along a side of the region");
            edges.push_back({s.edge, s.source, s.synthetic});
        }
    edges.push_back({Edge(g, local_span(g, window)), source, false});
    const Arrangement arr = Arrangement::build(edges, {}, window, tol);

    std::vector<SplitRegion> out;
    for (std::size_t f = 0; f < arr.faces().size(); ++f) {
        const Point c = arr.faces()[f].interior;
        if (!t.interior_contains(c, tol)) continue;
        SplitRegion piece{region_of_face(arr, static_cast<int>(f)), membership(g, c) > 0.0 ? 1 : -1};
        piece.region.closed = t.closed;
        out.push_back(std::move(piece));
    }
    return out;
}

namespace {

std::vector<SharedVertex> shared_vertices_of(const std::vector<TypeIRegion>& regions, double vt) {
    std::vector<SharedVertex> out;
    for (std::size_t a = 0; a < regions.size(); ++a)
        for (std::size_t b = a + 1; b < regions.size(); ++b)
            for (Point p : regions[a].vertices)
                for (Point q : regions[b].vertices)
                    if (distance(p, q) <= vt) {
                        bool dup = false;
                        for (const SharedVertex& s : out)
                            dup = dup || (s.a == static_cast<int>(a) && s.b == static_cast<int>(b) && distance(s.p, p) <= vt);
                        if (!dup) out.push_back({p, static_cast<int>(a), static_cast<int>(b)});
                    }
    return out;
}

}  // namespace

TypeIDecomposition intersect_halfplanes(const std::vector<HalfPlane>& hs, const Box& window, double tol) {
    TypeIDecomposition d;
    d.window = window;
    bool any_strict = false;
    for (const HalfPlane& h : hs) {
        any_strict = any_strict || h.strict;
        bool duplicate = false;
        for (const RotatedGraph& kept : d.graphs) {
            if (!same_graph(kept, h.graph)) continue;
            if (!same_side(kept, h.graph, window)) return d;  // only the shared curve, no interior
            duplicate = true;
        }
        if (!duplicate) d.graphs.push_back(h.graph);
    }

    std::vector<TypeIRegion> regions{window_region(window)};
    for (std::size_t k = 0; k < d.graphs.size(); ++k) {
        std::vector<TypeIRegion> next;
        for (const TypeIRegion& r : regions)
            for (SplitRegion& piece : split_region_by_graph(r, d.graphs[k], window, static_cast<int>(k), tol))
                if (piece.side > 0) next.push_back(std::move(piece.region));
        regions = std::move(next);
    }
    for (TypeIRegion& r : regions) r.closed = !any_strict;
    d.regions = std::move(regions);
    d.shared_vertices = shared_vertices_of(d.regions, 1e-7);
    return d;
}

ValidationReport validate_decomposition(const TypeIDecomposition& d, double vt) {
    ValidationReport rep;
    const int nr = static_cast<int>(d.regions.size());
    char buf[160];
    for (int r = 0; r < nr; ++r)
        for (const auto& comp : d.regions[r].boundary_components) {
            for (std::size_t i = 0; i < comp.size(); ++i) {
                const Side& s = comp[i];
                if (s.synthetic) continue;
                if (s.source < 0 || s.source >= static_cast<int>(d.graphs.size())) {
                    std::snprintf(buf, sizeof buf, "region %d side %zu has no defining graph", r, i);
                    rep.property[0].pass = false;
                    rep.property[0].witnesses.push_back(buf);
                } else {
                    for (Point p : s.edge.sample(6))
                        if (std::abs(membership(d.graphs[s.source], p)) > 1e-7) {
                            std::snprintf(buf, sizeof buf, "region %d side %zu leaves graph %d at ", r, i, s.source);
                            rep.property[0].pass = false;
                            rep.property[0].witnesses.push_back(buf + fmt_point(p));
                            break;
                        }
                }
                const Side& t = comp[(i + 1) % comp.size()];
                if (comp.size() > 1 && !t.synthetic && same_graph(s.edge.graph(), t.edge.graph())) {
                    std::snprintf(buf, sizeof buf, "region %d: adjacent sides on one graph meet at ", r);
                    rep.property[1].pass = false;
                    rep.property[1].witnesses.push_back(buf + fmt_point(s.end()));
                }
            }
        }

    for (int a = 0; a < nr; ++a)
        for (int b = a + 1; b < nr; ++b) {
            std::vector<Point> shared;
            for (Point p : d.regions[a].vertices)
                for (Point q : d.regions[b].vertices)
                    if (distance(p, q) <= vt) {
                        bool dup = false;
                        for (Point s : shared) dup = dup || distance(s, p) <= vt;
                        if (!dup) shared.push_back(p);
                    }
            if (shared.size() > 1) {
                std::snprintf(buf, sizeof buf, "regions %d and %d share %zu vertices", a, b, shared.size());
                rep.property[2].pass = false;
                rep.property[2].witnesses.push_back(buf);
            }
            for (const auto& comp : d.regions[a].boundary_components)
                for (const Side& s : comp) {
                    const Point m = s.edge.midpoint();
                    if (d.regions[b].boundary_distance(m) <= vt) {
                        std::snprintf(buf, sizeof buf, "regions %d and %d share the side through ", a, b);
                        rep.property[2].pass = false;
                        rep.property[2].witnesses.push_back(buf + fmt_point(m));
                    }
                }
        }

    struct Cluster {
        Point p;
        std::vector<int> regions;
    };
    std::vector<Cluster> clusters;
    for (int r = 0; r < nr; ++r)
        for (Point p : d.regions[r].vertices) {
            Cluster* hit = nullptr;
            for (Cluster& c : clusters)
                if (distance(c.p, p) <= vt) hit = &c;
            if (!hit) {
                clusters.push_back({p, {}});
                hit = &clusters.back();
            }
            if (std::find(hit->regions.begin(), hit->regions.end(), r) == hit->regions.end()) hit->regions.push_back(r);
        }
    for (const Cluster& c : clusters)
        if (c.regions.size() > 2) {
            std::snprintf(buf, sizeof buf, "%zu regions meet at ", c.regions.size());
            rep.property[3].pass = false;
            rep.property[3].witnesses.push_back(buf + fmt_point(c.p));
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Classification of basic sets

const char* to_string(Classification::Tag t) {
    switch (t) {
    case Classification::Tag::Empty: return "Empty";
    case Classification::Tag::FinitePoints: return "FinitePoints";
    case Classification::Tag::OpenPolynomialCurve: return "OpenPolynomialCurve";
    case Classification::Tag::TypeIIRegions: return "TypeIIRegions";
    }
    return "Unknown";
}

Classification classify_basic_set(const std::vector<RotatedGraph>& curves, const std::vector<HalfPlane>& opens,
                                  const Box& window, double tol) {
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            if (same_graph(curves[i], curves[j])) throw Error(ErrorKind::DuplicateSet, "two curves coincide");
    for (std::size_t i = 0; i < opens.size(); ++i)
        for (std::size_t j = i + 1; j < opens.size(); ++j)
            if (same_graph(opens[i].graph, opens[j].graph) && same_side(opens[i].graph, opens[j].graph, window))
                throw Error(ErrorKind::DuplicateSet, "two half-planes coincide");

    Classification out;
    if (curves.empty()) {
        std::vector<HalfPlane> strict = opens;
        for (HalfPlane& h : strict) h.strict = true;
        out.regions = intersect_halfplanes(strict, window, tol);
        out.tag = out.regions.regions.empty() ? Classification::Tag::Empty : Classification::Tag::TypeIIRegions;
        return out;
    }

    const RotatedGraph& g = curves[0];
    if (curves.size() == 1) {
        std::vector<Polynomial> qs;
        std::vector<double> cuts;
        for (const HalfPlane& h : opens) {
            Polynomial q = composed_difference(g, h.graph);  // membership of h along g
            if (q.is_zero()) return out;
            for (double r : all_real_roots(q, 1e-12).values()) cuts.push_back(r);
            qs.push_back(std::move(q));
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end(), [&](double a, double b) { return b - a <= tol; }), cuts.end());
        const double inf = std::numeric_limits<double>::infinity();
        std::vector<double> ends{-inf};
        ends.insert(ends.end(), cuts.begin(), cuts.end());
        ends.push_back(inf);
        for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
            const double a = ends[i];
            const double b = ends[i + 1];
            const double mid = std::isinf(a) && std::isinf(b) ? 0.0 : std::isinf(a) ? b - 1.0 : std::isinf(b) ? a + 1.0 : 0.5 * (a + b);
            bool ok = true;
            for (const Polynomial& q : qs) ok = ok && q(mid) > 0.0;
            if (!ok) continue;
            CurvePiece piece{g, {}};
            if (std::isinf(a) && std::isinf(b)) piece.span = {CurveKind::Whole};
            else if (std::isinf(a)) piece.span = {CurveKind::HalfOpen, b, 0.0, -1};
            else if (std::isinf(b)) piece.span = {CurveKind::HalfOpen, a, 0.0, 1};
            else piece.span = {CurveKind::Bounded, a, b, 1};
            out.curves.push_back(piece);
        }
        out.tag = out.curves.empty() ? Classification::Tag::Empty : Classification::Tag::OpenPolynomialCurve;
        return out;
    }

    const Polynomial h = composed_difference(g, curves[1]);
    for (double t : all_real_roots(h, 1e-13).values()) {
        const Point p = g.point_at(t);
        bool ok = true;
        for (std::size_t k = 2; k < curves.size(); ++k) ok = ok && std::abs(membership(curves[k], p)) <= 1e-7;
        for (const HalfPlane& o : opens) ok = ok && membership(o.graph, p) > 0.0;
        if (ok) out.points.push_back(p);
    }
    out.tag = out.points.empty() ? Classification::Tag::Empty : Classification::Tag::FinitePoints;
    return out;
}

// ---------------------------------------------------------------------------
// Boundary arrangements and unions

const char* to_string(Placement p) {
    switch (p) {
    case Placement::In: return "in";
    case Placement::Boundary: return "boundary";
    case Placement::Out: return "out";
    }
    return "unknown";
}

PlaneArrangement arrange_boundaries(const std::vector<TypeIRegion>& regions, const Box& window, double tol) {
    std::vector<EdgeSource> edges;
    for (std::size_t i = 0; i < regions.size(); ++i)
        for (const auto& comp : regions[i].boundary_components)
            for (const Side& s : comp)
                if (!s.synthetic) edges.push_back({s.edge, static_cast<int>(i), false});
    Arrangement arr = Arrangement::build(edges, {}, window, tol);

    auto place = [&](Point p) {
        for (const TypeIRegion& r : regions)
            if (r.contains(p, tol)) return Placement::In;
        for (const TypeIRegion& r : regions)
            if (r.boundary_distance(p) <= 10.0 * tol) return Placement::Boundary;
        return Placement::Out;
    };
    PlaneArrangement out;
    std::vector<char> vm, em, fm;
    for (const auto& v : arr.vertices()) out.vertex_flags.push_back(place(v.p));
    for (const auto& e : arr.edges()) out.edge_flags.push_back(place(e.geom.midpoint()));
    for (const auto& f : arr.faces()) out.face_flags.push_back(place(f.interior));
    for (Placement p : out.vertex_flags) vm.push_back(p == Placement::In);
    for (Placement p : out.edge_flags) em.push_back(p == Placement::In);
    for (Placement p : out.face_flags) fm.push_back(p == Placement::In);
    for (std::size_t f = 0; f < arr.faces().size(); ++f) out.faces.push_back(region_of_face(arr, static_cast<int>(f)));
    out.complex = CellComplex(std::move(arr), std::move(vm), std::move(em), std::move(fm));
    return out;
}

namespace {

bool on_curve(const CurvePiece& c, Point p, double tol) {
    const double t0 = c.graph.local_u(p);
    const Edge near(c.graph, {t0 - 1.0, t0 + 1.0});
    const Edge::Closest hit = near.closest(p);
    if (hit.distance > tol) return false;
    switch (c.span.kind) {
    case CurveKind::Whole: return true;
    case CurveKind::HalfOpen: return (c.span.direction > 0 ? hit.t - c.span.x0 : c.span.x0 - hit.t) > tol;
    case CurveKind::Bounded: return hit.t > c.span.x0 + tol && hit.t < c.span.x1 - tol;
    }
    return false;
}

CellComplex region_decomposition(const TypeIRegion& r, const Box& window, double tol) {
    std::vector<RotatedGraph> graphs;
    for (const auto& comp : r.boundary_components)
        for (const Side& s : comp) {
            if (s.synthetic) continue;
            bool dup = false;
            for (const RotatedGraph& g : graphs) dup = dup || same_graph(g, s.edge.graph());
            if (!dup) graphs.push_back(s.edge.graph());
        }
    const Mask inside = [&](Point p) { return r.contains(p, tol); };
    if (graphs.empty()) return rewindow(grid_decomposition(window, 1.0, {0, 0}, tol), window, inside);
    CellComplex acc;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        RotatedGraph g = graphs[i];
        if (membership(g, r.interior) < 0.0) g = flipped(g);
        CellComplex c = halfplane_decomposition(g, !r.closed, window, 1.0, 1e-4, tol);
        acc = i == 0 ? std::move(c) : overlay(acc, c, [](Point) { return true; });
    }
    return rewindow(acc, window, inside);
}

}  // namespace

bool union_contains(const std::vector<Point>& points, const std::vector<CurvePiece>& curves,
                    const std::vector<TypeIRegion>& regions, Point p, double tol) {
    for (Point q : points)
        if (distance(p, q) <= tol) return true;
    for (const TypeIRegion& r : regions)
        if (r.contains(p, tol)) return true;
    for (const CurvePiece& c : curves)
        if (on_curve(c, p, tol)) return true;
    return false;
}

CellComplex union_cell_decomposition(const std::vector<Point>& points, const std::vector<CurvePiece>& curves,
                                     const std::vector<TypeIRegion>& regions, const Box& window, double tol) {
    const int nr = static_cast<int>(regions.size());
    std::vector<EdgeSource> edges;
    for (int i = 0; i < nr; ++i) {
        const CellComplex c = region_decomposition(regions[i], window, tol);
        for (const auto& e : c.arrangement().edges()) {
            if (e.synthetic) continue;
            const int idx = static_cast<int>(&e - c.arrangement().edges().data());
            const Point m = e.geom.midpoint();
            if (c.member(1, idx) || regions[i].boundary_distance(m) <= tol) edges.push_back({e.geom, i, false});
        }
    }
    for (std::size_t j = 0; j < curves.size(); ++j) {
        const Interval span = local_span(curves[j].graph, window);
        const CellComplex c = open_curve_decomposition(curves[j].graph, curves[j].span, span, 1e-4, tol);
        for (std::size_t e = 0; e < c.arrangement().edges().size(); ++e)
            if (c.member(1, static_cast<int>(e)))
                edges.push_back({c.arrangement().edges()[e].geom, nr + static_cast<int>(j), false});
    }

    const Arrangement first = Arrangement::build(edges, {}, window, tol);
    auto in_region_interior = [&](Point p) {
        for (const TypeIRegion& r : regions)
            if (r.interior_contains(p, tol)) return true;
        return false;
    };
    std::vector<EdgeSource> kept;
    for (const auto& e : first.edges()) {
        if (e.synthetic) continue;
        const Point m = e.geom.midpoint();
        bool keep = false;
        for (int tag : e.tags) {
            if (tag < nr) keep = keep || regions[tag].contains(m, tol) || regions[tag].boundary_distance(m) <= tol;
            else keep = keep || (!in_region_interior(m) && on_curve(curves[tag - nr], m, tol));
        }
        if (keep) kept.push_back({e.geom, e.tags.empty() ? -1 : e.tags.front(), false});
    }
    std::vector<Point> kept_points;
    for (Point p : points) {
        bool covered = false;
        for (const TypeIRegion& r : regions) covered = covered || r.contains(p, tol);
        for (const CurvePiece& c : curves) covered = covered || on_curve(c, p, tol);
        if (!covered) kept_points.push_back(p);
    }
    return CellComplex::from_mask(Arrangement::build(kept, kept_points, window, tol),
                                  [&](Point p) { return union_contains(points, curves, regions, p, tol); });
}

}  // namespace semialg
