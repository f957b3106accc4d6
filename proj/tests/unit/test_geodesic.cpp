#include "semialg/errors.hpp"
#include "semialg/geodesic.hpp"
#include "semialg/oracle.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace semialg;

namespace {

constexpr double kPi = std::numbers::pi;

// Closed-form arc length of y = x^2 from 0 to x.
double parabola_arc(double x) { return x * std::sqrt(1 + 4 * x * x) / 2 + std::asinh(2 * x) / 4; }

double polyline_length(const std::vector<Point>& pts) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) s += distance(pts[i], pts[i + 1]);
    return s;
}

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::ValidationError;
}

}  // namespace

TEST(TangentApex, Examples) {
    const Polynomial f{0, 0, 1};
    const Point c = tangent_apex(f, -1, 1);
    EXPECT_NEAR(c.x, 0.0, 1e-15);
    EXPECT_NEAR(c.y, -1.0, 1e-15);
    const Point d = tangent_apex(f, 0, 0.5);
    EXPECT_NEAR(d.x, 0.25, 1e-15);
    EXPECT_NEAR(d.y, 0.0, 1e-15);
    EXPECT_EQ(kind_of([] { tangent_apex(Polynomial{0, 1}, 0, 1); }), ErrorKind::ParallelTangents);
}

TEST(TangentApex, BeatsEveryAdmissibleGridApex) {
    const Polynomial f{0, 0, 1};
    const double a = 0.2, b = 1.3;
    const Point c = tangent_apex(f, a, b);
    const Point pa{a, f(a)}, pb{b, f(b)};
    const double best = distance(pa, c) + distance(c, pb);
    auto below = [&](Point p, Point q) {
        for (int k = 0; k <= 40; ++k) {
            const Point s = p + (k / 40.0) * (q - p);
            if (s.y > f(s.x) + 1e-12) return false;
        }
        return true;
    };
    int admissible = 0;
    for (int i = 0; i < 60; ++i)
        for (int j = 0; j < 60; ++j) {
            const Point cp{-0.5 + 2.5 * i / 59.0, -1.0 + 3.0 * j / 59.0};
            if (!below(pa, cp) || !below(cp, pb)) continue;
            ++admissible;
            EXPECT_LE(best, distance(pa, cp) + distance(cp, pb) + 1e-12);
        }
    EXPECT_GT(admissible, 50);
}

TEST(Zigzag, ApexCurveIsAlreadyZigzag) {
    const Polynomial f{0, 0, 1};
    const Point c = tangent_apex(f, 1, 2);
    const ZigzagCurve z = zigzagify({{1, 1}, c, {2, 4}}, f, {1, 2});
    ASSERT_EQ(z.tangent_abscissae.size(), 2u);
    EXPECT_NEAR(z.length(), distance({1, 1}, c) + distance(c, {2, 4}), 1e-12);
}

TEST(Zigzag, ShortensThreeVertexCurve) {
    const Polynomial f{0, 0, 1};
    const std::vector<Point> input{{1, 1}, {1.4, 1.8}, {1.7, 2.5}, {2, 4}};
    const ZigzagCurve z = zigzagify(input, f, {1, 2});
    EXPECT_LE(z.vertex_count(), 3);
    EXPECT_LE(z.length(), polyline_length(input) + 1e-12);
    for (std::size_t j = 1; j <= z.apex_count(); ++j) {
        const Point c = z.apex(static_cast<int>(j));
        EXPECT_LE(c.y, f(c.x));
    }
}

TEST(Zigzag, VertexAboveGraphRejected) {
    const Polynomial f{0, 0, 1};
    EXPECT_EQ(kind_of([&] { zigzagify({{1, 1}, {1.5, 3.0}, {2, 4}}, f, {1, 2}); }), ErrorKind::NotBelowGraph);
}

TEST(Zigzag, RandomPolylinesNeverGetLonger) {
    testkit::Gen gen(4242);
    const Polynomial f{0.3, 0.5, 1.0, 0.2};  // convex and increasing on [0, 2]
    const Polynomial df = f.derivative();
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const double a = gen.uniform(0.0, 0.8);
        const double b = gen.uniform(1.2, 2.0);
        // Start tangent at a, then random points below the graph, end tangent at b.
        std::vector<Point> pts{{a, f(a)}};
        const int n = gen.integer(1, 5);
        const double x1 = a + gen.uniform(0.05, 0.3) * (b - a);
        pts.push_back({x1, f(a) + df(a) * (x1 - a)});
        for (int i = 1; i < n; ++i) {
            const double x = gen.uniform(pts.back().x, b);
            pts.push_back({x, f(x) - gen.uniform(0.0, 1.0)});
        }
        const double xn = b - gen.uniform(0.05, 0.3) * (b - a);
        pts.push_back({xn, f(b) + df(b) * (xn - b)});
        pts.push_back({b, f(b)});
        ZigzagCurve z;
        try {
            z = zigzagify(pts, f, {0, 2});
        } catch (const Error& e) {
            ASSERT_EQ(e.kind(), ErrorKind::NotBelowGraph);
            continue;
        }
        ++checked;
        EXPECT_LE(z.length(), polyline_length(pts) + 1e-9) << "trial " << trial;
        EXPECT_LE(z.vertex_count(), static_cast<int>(pts.size()) - 2) << "trial " << trial;
        for (std::size_t j = 1; j <= z.apex_count(); ++j) {
            const Point c = z.apex(static_cast<int>(j));
            const double s0 = z.tangent_abscissae[j - 1], s1 = z.tangent_abscissae[j];
            EXPECT_NEAR(c.y, f(s0) + df(s0) * (c.x - s0), 1e-9);
            EXPECT_NEAR(c.y, f(s1) + df(s1) * (c.x - s1), 1e-9);
        }
    }
    EXPECT_GT(checked, 50);
}

TEST(Zigzag, RefinementExample) {
    const Polynomial f{0, 0, 1};
    const ZigzagCurve z0 = make_zigzag(f, {-1, 1});
    EXPECT_NEAR(z0.length(), 2 * std::sqrt(5.0), 1e-12);
    const ZigzagCurve z1 = refine_zigzag(z0);
    ASSERT_EQ(z1.tangent_abscissae.size(), 3u);
    EXPECT_NEAR(z1.apex(1).x, -0.5, 1e-15);
    EXPECT_NEAR(z1.apex(1).y, 0.0, 1e-15);
    EXPECT_NEAR(z1.length(), 1 + 2 * std::sqrt(1.25), 1e-12);
    const ZigzagCurve z2 = refine_zigzag(z1);
    const double arc = 2 * parabola_arc(1.0);
    EXPECT_NEAR(arc, 2.957886, 1e-6);
    EXPECT_LT(z2.length(), z1.length());
    EXPECT_GT(z2.length(), arc);
    EXPECT_EQ(refine_zigzag(make_zigzag(f, {0.5})).length(), 0.0);
}

TEST(Zigzag, RefinementConvergesMonotonically) {
    testkit::Gen gen(8);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial f{gen.uniform(-1, 1), gen.uniform(0.1, 1), gen.uniform(0.2, 2)};
        const double a = 0.0, b = gen.uniform(0.5, 2.0);
        const double arc = arc_length_quadrature(f, {a, b}, 1e-13);
        ZigzagCurve z = make_zigzag(f, {a, b});
        double prev_gap = z.length() - arc;
        for (int k = 0; k < 12; ++k) {
            const ZigzagCurve next = refine_zigzag(z);
            const double gap = next.length() - arc;
            EXPECT_LT(next.length(), z.length());
            EXPECT_GT(gap, -1e-12);
            EXPECT_LE(gap, 0.5 * prev_gap + 1e-12);
            prev_gap = gap;
            z = next;
        }
    }
}

TEST(TriangleGap, WorkedExample) {
    const TriangleGap g = triangle_completion_gap(Polynomial{0, 0, 1}, {0, 0.5, 1});
    // Hand computation: chords, tangent-line apexes (0.25, 0) and (0.75, 0.5), and the triangle legs.
    const double lq = std::sqrt(0.25 + 0.0625) + std::sqrt(0.25 + 0.5625);
    const double lz = 0.25 + 2 * std::sqrt(0.125) + std::sqrt(0.0625 + 0.25);
    const double lt = 0.5 * std::sqrt(2.0) + 0.25 + 0.5 * std::sqrt(5.0) + 0.25;
    EXPECT_NEAR(g.inscribed, lq, 1e-12);
    EXPECT_NEAR(g.zigzag, lz, 1e-12);
    EXPECT_NEAR(g.triangles, lt, 1e-12);
    EXPECT_NEAR(g.inscribed, 1.460405, 1e-6);
    EXPECT_NEAR(g.zigzag, 1.516123, 1e-6);
    EXPECT_NEAR(g.triangles, 2.325141, 1e-6);
    EXPECT_NEAR(g.triangles - g.inscribed, 0.864736, 1e-6);
    auto gfun = [](double m) { return m + std::sqrt(1 + m * m); };
    const double gsum = 0.5 * (gfun(1.0) - gfun(0.5)) + 0.5 * (gfun(2.0) - gfun(1.5));
    EXPECT_NEAR(g.triangles - g.inscribed, gsum, 1e-9);
    EXPECT_LT(g.identity_residual, 1e-9);
}

TEST(TriangleGap, RefinementTightensZigzag) {
    const Polynomial f{0, 0, 1};
    const TriangleGap coarse = triangle_completion_gap(f, {0, 0.5, 1});
    const TriangleGap fine = triangle_completion_gap(f, {0, 0.25, 0.5, 0.75, 1});
    const double arc = parabola_arc(1.0);
    EXPECT_NEAR(arc, 1.478943, 1e-6);
    EXPECT_LT(fine.zigzag, coarse.zigzag);
    EXPECT_LT(fine.zigzag - arc, coarse.zigzag - arc);
}

TEST(TriangleGap, LinearCellHasNoGap) {
    const TriangleGap g = triangle_completion_gap(Polynomial{1, 2}, {0, 1});
    EXPECT_NEAR(g.inscribed, g.zigzag, 1e-15);
    EXPECT_NEAR(g.triangles - g.inscribed, 0.0, 1e-15);
}

TEST(TriangleGap, RandomIdentityAndSandwich) {
    testkit::Gen gen(123);
    int done = 0;
    while (done < 100) {
        const Polynomial f = gen.poly(gen.integer(2, 5), 1.0);
        const double x1 = gen.uniform(-2, 2);
        const double x2 = x1 + gen.uniform(0.1, 1.0);
        std::vector<double> q{x1, x2};
        for (int i = gen.integer(0, 6); i > 0; --i) q.push_back(gen.uniform(x1, x2));
        std::sort(q.begin(), q.end());
        TriangleGap g;
        try {
            g = triangle_completion_gap(f, q);
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::NotConvexIncreasing);
            continue;
        }
        ++done;
        const double arc = arc_length_quadrature(f, {x1, x2}, 1e-13);
        EXPECT_LT(g.identity_residual, 1e-9);
        EXPECT_LE(g.inscribed, arc + 1e-12);
        EXPECT_LE(arc, g.zigzag + 1e-12);
        EXPECT_LE(g.zigzag, g.triangles + 1e-12);
    }
}

TEST(TriangleGap, RejectsConcaveArc) {
    EXPECT_EQ(kind_of([] { triangle_completion_gap(Polynomial{0, 0, -1}, {0, 1}); }), ErrorKind::NotConvexIncreasing);
}

TEST(BelowGraph, LinearGivesSegment) {
    const PiecewiseCurve c = geodesic_below_graph(Polynomial{1, 0.5}, {-1, 0}, {2, 1});
    ASSERT_EQ(c.pieces.size(), 1u);
    EXPECT_FALSE(c.pieces[0].is_arc());
}

TEST(BelowGraph, EndpointsOnGraphFollowTheArc) {
    const PiecewiseCurve c = geodesic_below_graph(Polynomial{0, 0, 1}, {-1, 1}, {1, 1});
    ASSERT_EQ(c.pieces.size(), 1u);
    EXPECT_TRUE(c.pieces[0].is_arc());
    EXPECT_NEAR(c.length(), 2 * parabola_arc(1.0), 1e-9);
    EXPECT_NEAR(c.length(), 2.957886, 1e-6);
}

TEST(BelowGraph, WorkedSegmentArcSegment) {
    const PiecewiseCurve c = geodesic_below_graph(Polynomial{0, 0, 1}, {-1, 0.5}, {1, 0.5});
    ASSERT_EQ(c.pieces.size(), 3u);
    EXPECT_FALSE(c.pieces[0].is_arc());
    EXPECT_TRUE(c.pieces[1].is_arc());
    EXPECT_FALSE(c.pieces[2].is_arc());
    const double t = -1 + std::sqrt(0.5);  // root of t^2 + 2t + 0.5
    EXPECT_NEAR(c.pieces[1].param().lo, t, 1e-9);
    EXPECT_NEAR(c.pieces[1].param().hi, -t, 1e-9);
    const double expected = 2 * distance({-1, 0.5}, {t, t * t}) + 2 * parabola_arc(-t);
    EXPECT_NEAR(c.length(), expected, 1e-9);
    EXPECT_NEAR(c.length(), 2.25676, 1e-4);
    EXPECT_TRUE(geodesic_structure(c).ok());

    OracleConfig cfg;
    cfg.window = {-1.1, 1.1, -0.5, 0.6};
    cfg.grid_n = 512;
    const OraclePath o = polygonal_shortest_path([](Point p) { return p.y <= p.x * p.x; }, {-1, 0.5}, {1, 0.5}, cfg);
    EXPECT_LE(c.length(), o.length);
    EXPECT_GE(c.length(), o.length - o.resolution_bound);
}

TEST(BelowGraph, OutsideRaises) {
    EXPECT_EQ(kind_of([] { geodesic_below_graph(Polynomial{0, 0, 1}, {0, 1}, {1, 0}); }), ErrorKind::OutsideRegion);
}

TEST(BelowGraph, ReversalGivesSameLength) {
    const Polynomial f{0.2, -1, 0, 0.5};
    const PiecewiseCurve c1 = geodesic_below_graph(f, {-2, -3}, {2, 0});
    const PiecewiseCurve c2 = geodesic_below_graph(f, {2, 0}, {-2, -3});
    EXPECT_NEAR(c1.length(), c2.length(), 1e-10);
}

TEST(BelowGraph, RandomAgainstOracle) {
    testkit::Gen gen(77);
    for (int trial = 0; trial < 6; ++trial) {
        const Polynomial f = gen.poly(gen.integer(2, 4), 1.0);
        const double xa = gen.uniform(-1.5, -0.5), xb = gen.uniform(0.5, 1.5);
        const Point a{xa, f(xa) - gen.uniform(0.0, 0.6)};
        const Point b{xb, f(xb) - gen.uniform(0.0, 0.6)};
        const PiecewiseCurve c = geodesic_below_graph(f, a, b);
        const StructureReport s = geodesic_structure(c);
        EXPECT_TRUE(s.ok()) << "trial " << trial << " tangency " << s.tangency_residual;
        EXPECT_LT(c.continuity_gap(), 1e-9);

        double lo = std::min(a.y, b.y);
        for (int i = 0; i <= 200; ++i) lo = std::min(lo, f(xa + (xb - xa) * i / 200.0));
        OracleConfig cfg;
        cfg.window = {xa - 0.05, xb + 0.05, lo - 0.3, std::max(a.y, b.y) + 0.05};
        cfg.grid_n = 256;
        const OraclePath o = polygonal_shortest_path([&](Point p) { return p.y <= f(p.x); }, a, b, cfg);
        EXPECT_LE(c.length(), o.length + 1e-9) << "trial " << trial;
        EXPECT_GE(c.length(), o.length - o.resolution_bound) << "trial " << trial;
    }
}

namespace {

// Three-sided region like the worked example, with a side that bulges into it.
TypeIRegion bulging_region(const Box& w) {
    const std::vector<HalfPlane> hs{{{Polynomial{-0.5, 0, 1}, kPi / 4}, false},
                                    {{Polynomial{1}, -kPi / 2}, false},  // x <= 1
                                    {{Polynomial{1}, kPi}, false}};      // y >= -1
    return intersect_halfplanes(hs, w).regions.at(0);
}

bool in_bulging(Point p) {
    const RotatedGraph g{Polynomial{-0.5, 0, 1}, kPi / 4};
    return membership(g, p) >= 0 && p.x <= 1 && p.y >= -1;
}

}  // namespace

TEST(InRegion, ConvexRegionGivesSegment) {
    const Box w{-2, 2, -2, 2};
    const TypeIRegion r = intersect_halfplanes({{{Polynomial{1}, -kPi / 2}, false}, {{Polynomial{1}, kPi}, false}}, w).regions.at(0);
    const PiecewiseCurve c = geodesic_in_region(r, {-1.5, -0.5}, {0.5, 1.5});
    ASSERT_EQ(c.pieces.size(), 1u);
    EXPECT_NEAR(c.length(), distance({-1.5, -0.5}, {0.5, 1.5}), 1e-12);
}

TEST(InRegion, WrapsAroundBulge) {
    const Box w{-3, 3, -3, 3};
    const TypeIRegion r = bulging_region(w);
    const Point a{-0.5, -0.9}, b{1.0, 0.8};
    ASSERT_TRUE(in_bulging(a));
    ASSERT_TRUE(in_bulging(b));
    const PiecewiseCurve c = geodesic_in_region(r, a, b);
    ASSERT_EQ(c.pieces.size(), 3u);
    EXPECT_TRUE(c.pieces[1].is_arc());
    EXPECT_TRUE(geodesic_structure(c).ok());
    OracleConfig cfg;
    cfg.window = {-1.2, 1.2, -1.2, 1.2};
    cfg.grid_n = 384;
    const OraclePath o = polygonal_shortest_path(in_bulging, a, b, cfg);
    EXPECT_LE(c.length(), o.length);
    EXPECT_GE(c.length(), o.length - o.resolution_bound);
}

TEST(InRegion, PointsOnSideFollowIt) {
    const Box w{-3, 3, -3, 3};
    const TypeIRegion r = bulging_region(w);
    const RotatedGraph g{Polynomial{-0.5, 0, 1}, kPi / 4};
    const Point a = g.point_at(-0.6), b = g.point_at(0.6);
    const PiecewiseCurve c = geodesic_in_region(r, a, b);
    ASSERT_EQ(c.pieces.size(), 1u);
    ASSERT_TRUE(c.pieces[0].is_arc());
    EXPECT_NEAR(c.length(), Edge(g, {-0.6, 0.6}).length(), 1e-9);
}

// A wide window makes the sampled side coarse enough for the discrete path to
// skip samples where the side is nearly flat; the result must still be one arc.
TEST(InRegion, WideWindowSingleArc) {
    const double k = 1.3985298579224614, d = 0.49254841910406488, phi = 0.1333419032396547;
    const std::vector<HalfPlane> hs{{{Polynomial{-d, 0, k}, kPi / 4 + phi}, false},
                                    {{Polynomial{1}, normalize_angle(-kPi / 2 + phi)}, false},
                                    {{Polynomial{1}, kPi + phi}, false}};
    const TypeIRegion r = intersect_halfplanes(hs, {-4, 4, -4, 4}).regions.at(0);
    const Point a{-1.5300931838635659, -0.30436954267492133}, b{0.60509132102713536, 0.36606641390405292};
    const PiecewiseCurve c = geodesic_in_region(r, a, b);
    ASSERT_EQ(c.pieces.size(), 3u);
    ASSERT_TRUE(c.pieces[1].is_arc());
    EXPECT_TRUE(geodesic_structure(c).ok());
    // The arc leaves toward b at the nearer of the two tangent points from b.
    const RotatedGraph g = c.pieces[1].graph;
    // Tangent from (u, v) to v = k t^2 - d touches where t^2 - 2 u t + (d + v) / k = 0.
    const double ub = g.local_u(b), vb = g.poly(ub) - membership(g, b);
    const double near = ub - std::sqrt(ub * ub - (d + vb) / k);
    EXPECT_NEAR(c.pieces[1].to, near, 1e-7);
    auto inside = [&](Point p) {
        for (const auto& h : hs)
            if (membership(h.graph, p) < 0.0) return false;
        return true;
    };
    OracleConfig cfg;
    cfg.window = {-2, 2, -2, 2};
    cfg.grid_n = 384;
    const OraclePath o = polygonal_shortest_path(inside, a, b, cfg);
    EXPECT_LE(c.length(), o.length);
    EXPECT_GE(c.length(), o.length - o.resolution_bound);
}

TEST(InRegion, OutsideRaises) {
    const Box w{-3, 3, -3, 3};
    EXPECT_EQ(kind_of([&] { geodesic_in_region(bulging_region(w), {0.3, 0.3}, {1, -1}); }), ErrorKind::OutsideRegion);
}

TEST(Oracle, ConvexRegionBounds) {
    OracleConfig cfg;
    cfg.window = {-0.5, 3.5, -0.5, 4.5};
    cfg.grid_n = 128;
    const OraclePath o = polygonal_shortest_path([](Point) { return true; }, {0, 0}, {3, 4}, cfg);
    EXPECT_GE(o.length, 5.0 - 1e-12);
    EXPECT_LE(o.length, 5.0 + o.resolution_bound);
}

TEST(Oracle, Unreachable) {
    OracleConfig cfg;
    cfg.window = {-2, 2, -1, 1};
    cfg.grid_n = 64;
    EXPECT_EQ(kind_of([&] { polygonal_shortest_path([](Point p) { return std::abs(p.x) > 0.5; }, {-1, 0}, {1, 0}, cfg); }),
              ErrorKind::Unreachable);
}

TEST(Oracle, RefiningNeverLengthens) {
    OracleConfig cfg;
    cfg.window = {-1.1, 1.1, -0.5, 0.6};
    auto below = [](Point p) { return p.y <= p.x * p.x; };
    double prev = 1e300;
    for (int n : {64, 128, 256}) {
        cfg.grid_n = n;
        const double len = polygonal_shortest_path(below, {-1, 0.5}, {1, 0.5}, cfg).length;
        EXPECT_LE(len, prev + 1e-12);
        prev = len;
    }
}

TEST(Oracle, ArcLength) {
    EXPECT_NEAR(arc_length_quadrature(Polynomial{}, {0, 1}), 1.0, 1e-12);
    EXPECT_NEAR(arc_length_quadrature(Polynomial{0, 1}, {0, 1}), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(arc_length_quadrature(Polynomial{0, 0, 1}, {-1, 1}), 2 * parabola_arc(1.0), 1e-11);
    // Inscribed polylines approach it from below.
    double prev = 0.0;
    for (int m : {2, 4, 8, 16, 32}) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) {
            const double x0 = -1 + 2.0 * i / m, x1 = -1 + 2.0 * (i + 1) / m;
            s += distance({x0, x0 * x0}, {x1, x1 * x1});
        }
        EXPECT_GT(s, prev);
        EXPECT_LT(s, 2 * parabola_arc(1.0));
        prev = s;
    }
}
