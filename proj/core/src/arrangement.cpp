#include "semialg/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <unordered_map>

namespace semialg {

namespace {

constexpr double kPi = std::numbers::pi;

// Window crossing parameters strictly inside the edge's range.
std::vector<double> window_cuts(const Edge& e, const Box& w) {
    std::vector<double> cuts;
    const Interval r = e.param();
    const double eps = 1e-13 * (1.0 + r.width());
    auto add_roots = [&](const Polynomial& q) {
        if (q.is_zero()) return;
        for (double t : isolate_real_roots(q, r, 1e-13).values())
            if (t > r.lo + eps && t < r.hi - eps) cuts.push_back(t);
    };
    const Polynomial xs = e.x_poly();
    const Polynomial ys = e.y_poly();
    add_roots(xs.shifted(-w.xmin));
    add_roots(xs.shifted(-w.xmax));
    add_roots(ys.shifted(-w.ymin));
    add_roots(ys.shifted(-w.ymax));
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

std::vector<EdgeSource> clip(const EdgeSource& src, const Box& w, double tol) {
    std::vector<EdgeSource> out;
    if (!src.edge.box().intersects(w, tol)) return out;
    std::vector<double> ts{src.edge.param().lo};
    for (double t : window_cuts(src.edge, w)) ts.push_back(t);
    ts.push_back(src.edge.param().hi);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        if (ts[i + 1] <= ts[i]) continue;
        const Edge piece = src.edge.sub(ts[i], ts[i + 1]);
        if (!w.contains(piece.midpoint(), tol)) continue;
        out.push_back({piece, src.tag, src.synthetic});
    }
    return out;
}

class VertexIndex {
public:
    VertexIndex(double tol, std::vector<Arrangement::Vertex>& out) : tol_(tol), h_(std::max(tol, 1e-15) * 2.0), out_(out) {}

    int find_or_add(Point p) {
        const long long cx = key(p.x);
        const long long cy = key(p.y);
        int best = -1;
        double best_d = tol_;
        for (long long dx = -1; dx <= 1; ++dx)
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = map_.find(pack(cx + dx, cy + dy));
                if (it == map_.end()) continue;
                for (int id : it->second) {
                    const double d = distance(out_[id].p, p);
                    if (d <= best_d) {
                        best_d = d;
                        best = id;
                    }
                }
            }
        if (best >= 0) return best;
        out_.push_back({p});
        const int id = static_cast<int>(out_.size()) - 1;
        map_[pack(cx, cy)].push_back(id);
        return id;
    }

private:
    long long key(double v) const { return static_cast<long long>(std::floor(v / h_)); }
    static long long pack(long long a, long long b) { return a * 1000003LL + b * 7919LL + (a ^ (b << 21)); }

    double tol_;
    double h_;
    std::vector<Arrangement::Vertex>& out_;
    std::unordered_map<long long, std::vector<int>> map_;
};

double wrap_angle(double a) {
    while (a <= -kPi) a += 2.0 * kPi;
    while (a > kPi) a -= 2.0 * kPi;
    return a;
}

double direction_angle(Point d) {
    double a = std::atan2(d.y == 0.0 ? 0.0 : d.y, d.x);
    if (a <= -kPi + 1e-12) a += 2.0 * kPi;
    return a;
}

struct Cut {
    double t;
    Point p;
    int vertex = -1;
};

double polyline_area(const std::vector<Point>& pts) {
    double a = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& p = pts[i];
        const Point& q = pts[(i + 1) % pts.size()];
        a += p.x * q.y - q.x * p.y;
    }
    return 0.5 * a;
}

}  // namespace

void Arrangement::Grid::reset(const Box& b, int count) {
    box = b;
    n = std::clamp(static_cast<int>(std::sqrt(static_cast<double>(std::max(count, 1)))), 1, 64);
    cells.assign(static_cast<std::size_t>(n) * n, {});
}

void Arrangement::Grid::insert(const Box& b, int id) {
    auto ix = [&](double x) {
        const double w = box.width() > 0 ? box.width() : 1.0;
        return std::clamp(static_cast<int>(std::floor((x - box.xmin) / w * n)), 0, n - 1);
    };
    auto iy = [&](double y) {
        const double h = box.height() > 0 ? box.height() : 1.0;
        return std::clamp(static_cast<int>(std::floor((y - box.ymin) / h * n)), 0, n - 1);
    };
    for (int i = ix(b.xmin); i <= ix(b.xmax); ++i)
        for (int j = iy(b.ymin); j <= iy(b.ymax); ++j) cells[static_cast<std::size_t>(i) * n + j].push_back(id);
}

const std::vector<int>& Arrangement::Grid::at(Point p) const {
    const double w = box.width() > 0 ? box.width() : 1.0;
    const double h = box.height() > 0 ? box.height() : 1.0;
    const int i = std::clamp(static_cast<int>(std::floor((p.x - box.xmin) / w * n)), 0, n - 1);
    const int j = std::clamp(static_cast<int>(std::floor((p.y - box.ymin) / h * n)), 0, n - 1);
    return cells[static_cast<std::size_t>(i) * n + j];
}

Arrangement Arrangement::build(const std::vector<EdgeSource>& input, const std::vector<Point>& points,
                               const Box& window, double tol, bool frame) {
    Arrangement arr;
    arr.window_ = window;
    arr.tol_ = tol;

    std::vector<EdgeSource> es;
    for (const EdgeSource& src : input)
        for (EdgeSource& piece : clip(src, window, tol)) es.push_back(std::move(piece));
    if (frame) {
        const std::vector<Point> c = window.corners();
        for (int i = 0; i < 4; ++i) es.push_back({Edge::segment(c[i], c[(i + 1) % 4]), -1, true});
    }

    std::vector<std::vector<Cut>> cuts(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
        cuts[i].push_back({es[i].edge.param().lo, es[i].edge.start()});
        cuts[i].push_back({es[i].edge.param().hi, es[i].edge.end()});
    }
    auto clamp_t = [](const Edge& e, double t) { return std::clamp(t, e.param().lo, e.param().hi); };
    auto try_point_on = [&](std::size_t i, Point p) {
        const Edge& e = es[i].edge;
        if (!e.box().contains(p, tol)) return;
        const Edge::Closest c = e.closest(p);
        if (c.distance <= tol) cuts[i].push_back({c.t, p});
    };

    for (std::size_t i = 0; i < es.size(); ++i) {
        const Edge& a = es[i].edge;
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const Edge& b = es[j].edge;
            if (!a.box().intersects(b.box(), tol)) continue;
            const Interval ra{a.param().lo - tol, a.param().hi + tol};
            const Intersections hits = graph_intersections(a.graph(), b.graph(), ra, 1e-12);
            if (!hits.overlap_partial) {
                for (const GraphHit& h : hits.hits) {
                    if (!b.param().contains(h.t_b, tol)) continue;
                    if (!window.contains(h.point, tol)) continue;
                    cuts[i].push_back({clamp_t(a, h.t_a), h.point});
                    cuts[j].push_back({clamp_t(b, h.t_b), h.point});
                }
            }
            try_point_on(i, b.start());
            try_point_on(i, b.end());
            try_point_on(j, a.start());
            try_point_on(j, a.end());
        }
    }
    std::vector<Point> kept_points;
    for (Point p : points) {
        if (!window.contains(p, tol)) continue;
        kept_points.push_back(p);
        for (std::size_t i = 0; i < es.size(); ++i) try_point_on(i, p);
    }

    // Endpoints first so exact coordinates (corners, grid nodes) win the snap.
    VertexIndex vindex(tol, arr.vertices_);
    for (std::size_t i = 0; i < es.size(); ++i) {
        cuts[i][0].vertex = vindex.find_or_add(cuts[i][0].p);
        cuts[i][1].vertex = vindex.find_or_add(cuts[i][1].p);
    }
    for (auto& list : cuts)
        for (Cut& c : list)
            if (c.vertex < 0) c.vertex = vindex.find_or_add(c.p);
    for (Point p : kept_points) vindex.find_or_add(p);

    std::map<std::pair<int, int>, std::vector<int>> by_ends;
    for (std::size_t i = 0; i < es.size(); ++i) {
        auto& list = cuts[i];
        std::sort(list.begin(), list.end(), [](const Cut& x, const Cut& y) { return x.t < y.t; });
        std::vector<Cut> seq;
        for (const Cut& c : list)
            if (seq.empty() || seq.back().vertex != c.vertex) seq.push_back(c);
        for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
            if (seq[k + 1].t <= seq[k].t) continue;
            ArcEdge sub{es[i].edge.sub(seq[k].t, seq[k + 1].t), seq[k].vertex, seq[k + 1].vertex, {}, es[i].synthetic};
            if (es[i].tag >= 0) sub.tags.push_back(es[i].tag);
            const auto key = std::minmax(sub.v0, sub.v1);
            auto& same = by_ends[key];
            bool merged = false;
            for (int other : same) {
                ArcEdge& o = arr.edges_[other];
                if (o.geom.distance(sub.geom.midpoint()) > 4.0 * tol || sub.geom.distance(o.geom.midpoint()) > 4.0 * tol)
                    continue;
                for (int t : sub.tags)
                    if (std::find(o.tags.begin(), o.tags.end(), t) == o.tags.end()) o.tags.push_back(t);
                std::sort(o.tags.begin(), o.tags.end());
                if (o.synthetic && !sub.synthetic) {
                    o.geom = sub.geom;
                    o.v0 = sub.v0;
                    o.v1 = sub.v1;
                    o.synthetic = false;
                }
                merged = true;
                break;
            }
            if (merged) continue;
            same.push_back(static_cast<int>(arr.edges_.size()));
            arr.edges_.push_back(std::move(sub));
        }
    }

    arr.finish_faces();
    arr.build_index();
    return arr;
}

Point Arrangement::side_start(Side s) const {
    const ArcEdge& e = edges_[s.edge];
    return vertices_[s.forward ? e.v0 : e.v1].p;
}

Point Arrangement::side_end(Side s) const {
    const ArcEdge& e = edges_[s.edge];
    return vertices_[s.forward ? e.v1 : e.v0].p;
}

std::vector<Point> Arrangement::cycle_polyline(const std::vector<Side>& cycle, int per_edge) const {
    std::vector<Point> pts;
    for (const Side& s : cycle) {
        const ArcEdge& e = edges_[s.edge];
        pts.push_back(side_start(s));
        if (e.geom.straight()) continue;
        std::vector<Point> inner = e.geom.sample(per_edge);
        if (!s.forward) std::reverse(inner.begin(), inner.end());
        for (std::size_t k = 1; k + 1 < inner.size(); ++k) pts.push_back(inner[k]);
    }
    return pts;
}

std::vector<int> Arrangement::cycle_vertices(const std::vector<Side>& cycle) const {
    std::vector<int> out;
    for (const Side& s : cycle) out.push_back(s.forward ? edges_[s.edge].v0 : edges_[s.edge].v1);
    return out;
}

void Arrangement::finish_faces() {
    const int nv = static_cast<int>(vertices_.size());
    const int ne = static_cast<int>(edges_.size());

    // Outgoing half-edges per vertex in counterclockwise order; half-edge 2e is e forward.
    struct Out {
        int h;
        double angle;
        double bend;
    };
    std::vector<std::vector<Out>> outs(nv);
    for (int e = 0; e < ne; ++e) {
        const ArcEdge& a = edges_[e];
        const Interval r = a.geom.param();
        const double off = std::min(1e-3, 1e-3 * r.width());
        for (int fwd = 0; fwd < 2; ++fwd) {
            const bool forward = fwd == 0;
            const int v = forward ? a.v0 : a.v1;
            const Point tan = forward ? a.geom.tangent(r.lo) : Point{0, 0} - a.geom.tangent(r.hi);
            const Point chord = a.geom.point(forward ? r.lo + off : r.hi - off) - vertices_[v].p;
            const double angle = direction_angle(tan);
            outs[v].push_back({2 * e + fwd, angle, wrap_angle(direction_angle(chord) - angle)});
        }
    }
    std::vector<int> pos(2 * ne, 0);
    for (int v = 0; v < nv; ++v) {
        auto& o = outs[v];
        std::sort(o.begin(), o.end(), [](const Out& x, const Out& y) { return x.angle < y.angle; });
        for (std::size_t i = 0; i < o.size();) {
            std::size_t j = i + 1;
            while (j < o.size() && o[j].angle - o[j - 1].angle < 1e-9) ++j;
            if (j - i > 1)
                std::sort(o.begin() + i, o.begin() + j, [](const Out& x, const Out& y) { return x.bend < y.bend; });
            i = j;
        }
        for (std::size_t i = 0; i < o.size(); ++i) pos[o[i].h] = static_cast<int>(i);
    }
    auto target = [&](int h) { return (h & 1) ? edges_[h >> 1].v0 : edges_[h >> 1].v1; };
    auto next = [&](int h) {
        const int w = target(h);
        const auto& o = outs[w];
        const int deg = static_cast<int>(o.size());
        return o[(pos[h ^ 1] + deg - 1) % deg].h;
    };

    std::vector<std::vector<Side>> cycles;
    std::vector<char> seen(2 * ne, 0);
    for (int h0 = 0; h0 < 2 * ne; ++h0) {
        if (seen[h0]) continue;
        std::vector<Side> cyc;
        int h = h0;
        while (!seen[h]) {
            seen[h] = 1;
            cyc.push_back({h >> 1, (h & 1) == 0});
            h = next(h);
        }
        cycles.push_back(std::move(cyc));
    }

    std::vector<int> comp(nv);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const ArcEdge& e : edges_) comp[find(e.v0)] = find(e.v1);

    faces_.clear();
    std::vector<int> holes;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        const double area = polyline_area(cycle_polyline(cycles[c]));
        if (area > 1e-13) {
            Face f;
            f.cycles.push_back(cycles[c]);
            f.area = area;
            faces_.push_back(std::move(f));
        } else {
            holes.push_back(static_cast<int>(c));
        }
    }
    for (Face& f : faces_) {
        f.box = Box::around(side_start(f.cycles[0][0]));
        for (const Side& s : f.cycles[0]) {
            const Box& b = edges_[s.edge].geom.box();
            f.box.include({b.xmin, b.ymin});
            f.box.include({b.xmax, b.ymax});
        }
    }
    std::vector<int> face_comp(faces_.size());
    for (std::size_t i = 0; i < faces_.size(); ++i) face_comp[i] = find(edges_[faces_[i].cycles[0][0].edge].v0);

    for (int c : holes) {
        const int v = edges_[cycles[c][0].edge].v0;
        const Point p = vertices_[v].p;
        const int cid = find(v);
        int best = -1;
        for (std::size_t i = 0; i < faces_.size(); ++i) {
            if (face_comp[i] == cid || !faces_[i].box.contains(p)) continue;
            if (best >= 0 && faces_[i].area >= faces_[best].area) continue;
            int crossings = 0;
            for (const Side& s : faces_[i].cycles[0]) {
                const ArcEdge& e = edges_[s.edge];
                crossings += ray_crossings(e.geom, vertices_[e.v0].p, vertices_[e.v1].p, p);
            }
            if (crossings % 2 == 1) best = static_cast<int>(i);
        }
        if (best >= 0) faces_[best].cycles.push_back(cycles[c]);
    }
    for (Face& f : faces_) f.interior = interior_point(f);
}

bool Arrangement::face_contains(int face, Point p) const {
    const Face& f = faces_[face];
    if (!f.box.contains(p)) return false;
    int crossings = 0;
    for (const auto& cyc : f.cycles)
        for (const Side& s : cyc) {
            const ArcEdge& e = edges_[s.edge];
            crossings += ray_crossings(e.geom, vertices_[e.v0].p, vertices_[e.v1].p, p);
        }
    return crossings % 2 == 1;
}

Point Arrangement::interior_point(const Face& f) const {
    std::vector<int> boundary;
    for (const auto& cyc : f.cycles)
        for (const Side& s : cyc) boundary.push_back(s.edge);
    std::sort(boundary.begin(), boundary.end());
    boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());

    Point best = side_start(f.cycles[0][0]);
    double best_clear = -1.0;
    const int idx = static_cast<int>(&f - faces_.data());
    for (double frac : {0.5, 0.25, 0.75, 0.125, 0.375, 0.625, 0.875, 0.0625, 0.9375}) {
        const double y = f.box.ymin + frac * f.box.height();
        std::vector<double> xs;
        for (int e : boundary) {
            const Edge& g = edges_[e].geom;
            if (g.box().ymin > y || g.box().ymax < y) continue;
            const Polynomial xp = g.x_poly();
            for (double t : horizontal_hits(g, y)) xs.push_back(xp(t));
            for (int v : {edges_[e].v0, edges_[e].v1})
                if (std::abs(vertices_[v].p.y - y) <= 1e-12) xs.push_back(vertices_[v].p.x);
        }
        std::sort(xs.begin(), xs.end());
        for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
            if (xs[k + 1] - xs[k] <= 2.0 * best_clear) continue;
            const Point c{0.5 * (xs[k] + xs[k + 1]), y};
            if (!face_contains(idx, c)) continue;
            double clear = 1e300;
            for (int e : boundary) clear = std::min(clear, edges_[e].geom.distance(c));
            if (clear > best_clear) {
                best_clear = clear;
                best = c;
            }
        }
    }
    return best;
}

void Arrangement::build_index() {
    const Box b = window_.expanded(tol_);
    vgrid_.reset(b, static_cast<int>(vertices_.size()));
    egrid_.reset(b, static_cast<int>(edges_.size()));
    fgrid_.reset(b, static_cast<int>(faces_.size()));
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        vgrid_.insert(Box::around(vertices_[i].p).expanded(tol_), static_cast<int>(i));
    for (std::size_t i = 0; i < edges_.size(); ++i) egrid_.insert(edges_[i].geom.box().expanded(tol_), static_cast<int>(i));
    for (std::size_t i = 0; i < faces_.size(); ++i) fgrid_.insert(faces_[i].box, static_cast<int>(i));
}

Arrangement::Location Arrangement::locate(Point p) const {
    Location best;
    double best_d = tol_;
    for (int v : vgrid_.at(p)) {
        const double d = distance(vertices_[v].p, p);
        if (d <= best_d) {
            best_d = d;
            best = {0, v};
        }
    }
    if (best.found()) return best;
    for (int e : egrid_.at(p)) {
        if (!edges_[e].geom.box().contains(p, tol_)) continue;
        const double d = edges_[e].geom.distance(p);
        if (d <= best_d) {
            best_d = d;
            best = {1, e};
        }
    }
    if (best.found()) return best;
    for (int f : fgrid_.at(p))
        if (face_contains(f, p)) return {2, f};
    return best;
}

Arrangement Arrangement::from_parts(const Box& window, double tol, std::vector<Vertex> vertices,
                                    std::vector<ArcEdge> edges, std::vector<Face> faces) {
    Arrangement arr;
    arr.window_ = window;
    arr.tol_ = tol;
    arr.vertices_ = std::move(vertices);
    arr.edges_ = std::move(edges);
    arr.faces_ = std::move(faces);
    for (Face& f : arr.faces_) {
        if (f.cycles.empty()) continue;
        f.area = polyline_area(arr.cycle_polyline(f.cycles[0]));
        f.box = Box::around(arr.side_start(f.cycles[0][0]));
        for (const Side& s : f.cycles[0]) {
            const Box& b = arr.edges_[s.edge].geom.box();
            f.box.include({b.xmin, b.ymin});
            f.box.include({b.xmax, b.ymax});
        }
    }
    arr.build_index();
    return arr;
}

}  // namespace semialg
