#include "semialg/errors.hpp"
#include "semialg/regions.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace semialg;

namespace {

constexpr double kPi = std::numbers::pi;

// Half-planes written directly in world terms.
HalfPlane below_graph(Polynomial f, bool strict = false) { return {{std::move(f), 0.0}, strict}; }
HalfPlane left_of(double c) { return {{Polynomial{c}, -kPi / 2}, false}; }  // x <= c
HalfPlane above(double c) { return {{Polynomial{-c}, kPi}, false}; }        // y >= c

bool has_vertex(const TypeIRegion& r, Point p, double tol = 1e-7) {
    for (Point v : r.vertices)
        if (distance(v, p) <= tol) return true;
    return false;
}

int real_sides(const TypeIRegion& r) {
    int n = 0;
    for (const auto& comp : r.boundary_components)
        for (const Side& s : comp) n += s.synthetic ? 0 : 1;
    return n;
}

// Independent flood fill over a sampled grid: number of 4-connected components of `in`.
int flood_components(const Box& w, int n, const std::function<bool(Point)>& in) {
    std::vector<int> label(n * n, -1);
    auto at = [&](int i, int j) { return Point{w.xmin + (i + 0.5) * w.width() / n, w.ymin + (j + 0.5) * w.height() / n}; };
    int comps = 0;
    for (int s = 0; s < n * n; ++s) {
        if (label[s] >= 0 || !in(at(s % n, s / n))) continue;
        std::vector<int> stack{s};
        label[s] = comps;
        while (!stack.empty()) {
            const int c = stack.back();
            stack.pop_back();
            const int i = c % n, j = c / n;
            const int nb[4][2] = {{i + 1, j}, {i - 1, j}, {i, j + 1}, {i, j - 1}};
            for (auto& q : nb) {
                if (q[0] < 0 || q[1] < 0 || q[0] >= n || q[1] >= n) continue;
                const int k = q[1] * n + q[0];
                if (label[k] < 0 && in(at(q[0], q[1]))) {
                    label[k] = comps;
                    stack.push_back(k);
                }
            }
        }
        ++comps;
    }
    return comps;
}

}  // namespace

TEST(Split, HorizontalLineGivesTwoRegions) {
    const Box w{-2, 2, -2, 2};
    const RotatedGraph g{Polynomial{}, 0.0};
    const auto parts = split_region_by_graph(window_region(w), g, w);
    ASSERT_EQ(parts.size(), 2u);
    int up = 0, down = 0;
    for (const auto& p : parts) {
        EXPECT_EQ(real_sides(p.region), 1);
        EXPECT_NEAR(p.region.area(), 8.0, 1e-9);
        (p.side > 0 ? down : up)++;
    }
    EXPECT_EQ(up, 1);
    EXPECT_EQ(down, 1);
}

TEST(Split, ParabolaThroughBottomGivesThreeRegions) {
    const Box w{-1, 1, -0.25, 1.75};
    const RotatedGraph g{Polynomial{-0.5, 0, 1}, 0.0};
    const auto parts = split_region_by_graph(window_region(w), g, w);
    // Flood-fill count of the window minus the curve.
    const int expected = flood_components(w, 200, [&](Point p) { return std::abs(membership(g, p)) > 0.03; });
    EXPECT_EQ(expected, 3);
    EXPECT_EQ(parts.size(), 3u);
}

TEST(Split, GraphOutsideLeavesRegionAlone) {
    const Box w{-1, 1, -1, 1};
    const RotatedGraph g{Polynomial{5, 0, 1}, 0.0};
    const auto parts = split_region_by_graph(window_region(w), g, w);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_NEAR(parts[0].region.area(), 4.0, 1e-12);
    EXPECT_EQ(parts[0].side, 1);
}

TEST(Split, OverlapRaises) {
    const Box w{-2, 2, -2, 2};
    const RotatedGraph g{Polynomial{0, 0, 1}, 0.0};
    const auto parts = split_region_by_graph(window_region(w), g, w, 0);
    try {
        split_region_by_graph(parts[0].region, g, w);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OverlapSide);
    }
}

TEST(Intersect, WorkedExampleTriangle) {
    const Box w{-3, 3, -3, 3};
    const std::vector<HalfPlane> hs{{{Polynomial{2, 0, -1}, kPi / 4}, false}, left_of(1.0), above(-1.0)};
    const TypeIDecomposition d = intersect_halfplanes(hs, w);
    ASSERT_EQ(d.regions.size(), 1u);
    const TypeIRegion& r = d.regions[0];
    EXPECT_EQ(r.boundary_components.size(), 1u);
    EXPECT_EQ(real_sides(r), 3);
    EXPECT_EQ(r.vertices.size(), 3u);
    EXPECT_TRUE(has_vertex(r, {1, -1}));
    EXPECT_TRUE(has_vertex(r, {1, 1}));
    EXPECT_TRUE(has_vertex(r, {-1, -1}));
    EXPECT_TRUE(validate_decomposition(d).ok());
    EXPECT_TRUE(r.contains({0.5, 0.0}));
    EXPECT_FALSE(r.contains({1.5, 0.0}));
    EXPECT_TRUE(r.contains({-1.0, 1.0}));
    EXPECT_FALSE(r.contains({-2.0, 2.0}));
}

TEST(Intersect, DisjointIsEmpty) {
    const Box w{-3, 3, -3, 3};
    // y <= x^2 - 2 and y >= x^2.
    const std::vector<HalfPlane> hs{below_graph(Polynomial{-2, 0, 1}), {{Polynomial{0, 0, -1}, kPi}, false}};
    const TypeIDecomposition d = intersect_halfplanes(hs, w);
    EXPECT_TRUE(d.regions.empty());
    EXPECT_TRUE(validate_decomposition(d).ok());
}

TEST(Intersect, SingleHalfPlaneIsOneRegion) {
    const Box w{-2, 2, -2, 2};
    const TypeIDecomposition d = intersect_halfplanes({below_graph(Polynomial{0, 0.3, 0, -0.2})}, w);
    ASSERT_EQ(d.regions.size(), 1u);
    EXPECT_EQ(real_sides(d.regions[0]), 1);
}

TEST(Intersect, DuplicatesAreDropped) {
    const Box w{-2, 2, -2, 2};
    const HalfPlane h = below_graph(Polynomial{0, 0, 1});
    const TypeIDecomposition d = intersect_halfplanes({h, h}, w);
    EXPECT_EQ(d.graphs.size(), 1u);
    ASSERT_EQ(d.regions.size(), 1u);
}

TEST(Intersect, OppositeSidesOfOneGraphAreEmpty) {
    const Box w{-2, 2, -2, 2};
    const TypeIDecomposition d = intersect_halfplanes({below_graph(Polynomial{}), {{Polynomial{}, kPi}, false}}, w);
    EXPECT_TRUE(d.regions.empty());
}

TEST(Intersect, RandomScenesValidateAndAgreeWithMembership) {
    testkit::Gen gen(20261019);
    const Box w{-3, 3, -3, 3};
    const double thetas[] = {0.0, kPi / 4, kPi / 2};
    for (int scene = 0; scene < 100; ++scene) {
        std::vector<HalfPlane> hs;
        const int k = gen.integer(1, 4);
        for (int i = 0; i < k; ++i)
            hs.push_back({{gen.poly(gen.integer(1, 3), 1.5), thetas[gen.integer(0, 2)]}, false});
        const TypeIDecomposition d = intersect_halfplanes(hs, w);
        const ValidationReport rep = validate_decomposition(d);
        for (int p = 0; p < 4; ++p)
            EXPECT_TRUE(rep.property[p].pass)
                << "scene " << scene << " property " << p + 1 << ": "
                << (rep.property[p].witnesses.empty() ? "" : rep.property[p].witnesses[0]);

        for (int s = 0; s < 60; ++s) {
            const Point q{gen.uniform(w.xmin, w.xmax), gen.uniform(w.ymin, w.ymax)};
            bool in_region = false;
            for (const TypeIRegion& r : d.regions) in_region = in_region || r.interior_contains(q, 1e-6);
            double worst = 1e300;
            for (const HalfPlane& h : hs) worst = std::min(worst, membership(h.graph, q));
            if (in_region) {
                EXPECT_GE(worst, -1e-9) << "scene " << scene;
            } else {
                bool near_boundary = false;
                for (const TypeIRegion& r : d.regions) near_boundary = near_boundary || r.boundary_distance(q) <= 1e-6;
                EXPECT_TRUE(worst < 0.0 || near_boundary) << "scene " << scene << " at " << q.x << "," << q.y;
            }
        }
    }
}

TEST(Validate, SharedSideFailsPropertyThree) {
    const Box w{-2, 2, -2, 2};
    const RotatedGraph g{Polynomial{}, 0.0};
    TypeIDecomposition d;
    d.window = w;
    d.graphs = {g};
    for (auto& p : split_region_by_graph(window_region(w), g, w, 0)) d.regions.push_back(p.region);
    const ValidationReport rep = validate_decomposition(d);
    EXPECT_TRUE(rep.property[0].pass);
    EXPECT_TRUE(rep.property[1].pass);
    EXPECT_FALSE(rep.property[2].pass);
    bool side_witness = false;
    for (const auto& s : rep.property[2].witnesses) side_witness = side_witness || s.find("side") != std::string::npos;
    EXPECT_TRUE(side_witness);
}

TEST(Validate, EmptyPassesVacuously) { EXPECT_TRUE(validate_decomposition({}).ok()); }

TEST(Classify, TwoLinesMeetInOnePoint) {
    const Box w{-2, 2, -2, 2};
    const Classification c = classify_basic_set({{Polynomial{0, 1}, 0.0}, {Polynomial{0, -1}, 0.0}}, {}, w);
    EXPECT_EQ(c.tag, Classification::Tag::FinitePoints);
    ASSERT_EQ(c.points.size(), 1u);
    EXPECT_NEAR(c.points[0].x, 0.0, 1e-9);
    EXPECT_NEAR(c.points[0].y, 0.0, 1e-9);
}

TEST(Classify, ParabolaCutByLineIsBounded) {
    const Box w{-2, 2, -2, 2};
    const Classification c = classify_basic_set({{Polynomial{0, 0, 1}, 0.0}}, {below_graph(Polynomial{1}, true)}, w);
    EXPECT_EQ(c.tag, Classification::Tag::OpenPolynomialCurve);
    ASSERT_EQ(c.curves.size(), 1u);
    EXPECT_EQ(c.curves[0].span.kind, CurveKind::Bounded);
    EXPECT_NEAR(c.curves[0].span.x0, -1.0, 1e-9);
    EXPECT_NEAR(c.curves[0].span.x1, 1.0, 1e-9);
}

TEST(Classify, CurveKinds) {
    const Box w{-2, 2, -2, 2};
    const RotatedGraph line{Polynomial{0, 1}, 0.0};
    const Classification whole = classify_basic_set({line}, {below_graph(Polynomial{5, 0, 1}, true)}, w);
    ASSERT_EQ(whole.curves.size(), 1u);
    EXPECT_EQ(whole.curves[0].span.kind, CurveKind::Whole);
    // y < 1 along y = x leaves the ray x < 1.
    const Classification ray = classify_basic_set({line}, {below_graph(Polynomial{1}, true)}, w);
    ASSERT_EQ(ray.curves.size(), 1u);
    EXPECT_EQ(ray.curves[0].span.kind, CurveKind::HalfOpen);
    EXPECT_EQ(ray.curves[0].span.direction, -1);
    EXPECT_NEAR(ray.curves[0].span.x0, 1.0, 1e-9);
    const Classification none = classify_basic_set({line}, {below_graph(Polynomial{-1, 0, -1}, true), below_graph(Polynomial{5}, true)}, w);
    // y = x against y < -1 - x^2 never holds.
    EXPECT_EQ(none.tag, Classification::Tag::Empty);
}

TEST(Classify, OneOpenHalfPlane) {
    const Box w{-2, 2, -2, 2};
    const Classification c = classify_basic_set({}, {below_graph(Polynomial{0, 0, 1}, true)}, w);
    EXPECT_EQ(c.tag, Classification::Tag::TypeIIRegions);
    ASSERT_EQ(c.regions.regions.size(), 1u);
    EXPECT_FALSE(c.regions.regions[0].closed);
    EXPECT_FALSE(c.regions.regions[0].contains({0, 0}));
    EXPECT_TRUE(c.regions.regions[0].contains({1, 0}));
}

TEST(Classify, Duplicates) {
    const Box w{-2, 2, -2, 2};
    const RotatedGraph g{Polynomial{0, 0, 1}, 0.0};
    EXPECT_THROW(classify_basic_set({g, g}, {}, w), Error);
    EXPECT_THROW(classify_basic_set({}, {below_graph(Polynomial{1}, true), below_graph(Polynomial{1}, true)}, w), Error);
}

TEST(Classify, RandomPointsSatisfyEveryCurve) {
    testkit::Gen gen(99);
    const Box w{-3, 3, -3, 3};
    for (int i = 0; i < 40; ++i) {
        std::vector<RotatedGraph> curves;
        const int m = gen.integer(2, 3);
        for (int k = 0; k < m; ++k) curves.push_back({gen.poly(gen.integer(1, 3)), gen.uniform(-kPi, kPi)});
        Classification c;
        try {
            c = classify_basic_set(curves, {}, w);
        } catch (const Error&) {
            continue;
        }
        for (Point p : c.points)
            for (const RotatedGraph& g : curves) EXPECT_LE(std::abs(membership(g, p)), 1e-7);
    }
}

namespace {

TypeIRegion open_region(std::vector<HalfPlane> hs, const Box& w) {
    for (auto& h : hs) h.strict = true;
    const TypeIDecomposition d = intersect_halfplanes(hs, w);
    EXPECT_EQ(d.regions.size(), 1u);
    return d.regions.at(0);
}

bool union_of(const std::vector<TypeIRegion>& rs, Point p) {
    for (const TypeIRegion& r : rs)
        if (r.contains(p)) return true;
    return false;
}

void expect_flags_match(const PlaneArrangement& pa, const std::vector<TypeIRegion>& rs) {
    const Arrangement& a = pa.complex.arrangement();
    for (std::size_t f = 0; f < a.faces().size(); ++f)
        EXPECT_EQ(pa.face_flags[f] == Placement::In, union_of(rs, a.faces()[f].interior));
    for (std::size_t e = 0; e < a.edges().size(); ++e)
        EXPECT_EQ(pa.edge_flags[e] == Placement::In, union_of(rs, a.edges()[e].geom.midpoint()));
}

}  // namespace

TEST(Arrange, OneRegionTwoFaces) {
    const Box w{-2, 2, -2, 2};
    const std::vector<TypeIRegion> rs{open_region({below_graph(Polynomial{0, 0, 1})}, w)};
    const PlaneArrangement pa = arrange_boundaries(rs, w);
    EXPECT_EQ(pa.faces.size(), 2u);
    int in = 0;
    for (Placement p : pa.face_flags) in += p == Placement::In;
    EXPECT_EQ(in, 1);
    for (std::size_t e = 0; e < pa.edge_flags.size(); ++e)
        if (!pa.complex.arrangement().edges()[e].synthetic) EXPECT_EQ(pa.edge_flags[e], Placement::Boundary);
    expect_flags_match(pa, rs);
}

TEST(Arrange, DisjointRegionsThreeFaces) {
    const Box w{-3, 3, -3, 3};
    const std::vector<TypeIRegion> rs{
        open_region({below_graph(Polynomial{-2, 0, -1})}, w),                 // y < -2 - x^2
        open_region({{{Polynomial{-2, 0, -1}, kPi}, false}}, w)};             // y > 2 + x^2
    const PlaneArrangement pa = arrange_boundaries(rs, w);
    EXPECT_EQ(pa.faces.size(), 3u);
    expect_flags_match(pa, rs);
}

TEST(Arrange, SlitBetweenTwoLenses) {
    const Box w{-2, 2, -2, 2};
    const HalfPlane under_cap = below_graph(Polynomial{1, 0, -1});      // y < 1 - x^2
    const HalfPlane over_cup = {{Polynomial{1, 0, -1}, kPi}, false};    // y > x^2 - 1
    const HalfPlane over_axis = {{Polynomial{}, kPi}, false};           // y > 0
    const HalfPlane under_axis = below_graph(Polynomial{});             // y < 0
    const std::vector<TypeIRegion> rs{open_region({under_cap, over_axis}, w), open_region({over_cup, under_axis}, w)};
    const PlaneArrangement pa = arrange_boundaries(rs, w);
    const Arrangement& a = pa.complex.arrangement();
    bool slit_found = false;
    for (std::size_t e = 0; e < a.edges().size(); ++e) {
        const Point m = a.edges()[e].geom.midpoint();
        if (std::abs(m.y) < 1e-12 && std::abs(m.x) < 1.0) {
            slit_found = true;
            EXPECT_EQ(pa.edge_flags[e], Placement::Boundary);
            // Faces on both sides are in the union.
            for (double dy : {0.1, -0.1}) {
                const Arrangement::Location loc = a.locate({m.x, dy});
                ASSERT_EQ(loc.dim, 2);
                EXPECT_EQ(pa.face_flags[loc.index], Placement::In);
            }
        }
    }
    EXPECT_TRUE(slit_found);
    expect_flags_match(pa, rs);
    EXPECT_TRUE(partition_check(pa.complex, [&](Point p) { return union_of(rs, p); }, 2000, 3).ok());
}

TEST(Union, TwoCrossingLines) {
    const Box w{-2.5, 2.5, -2.5, 2.5};
    const std::vector<CurvePiece> curves{{{Polynomial{0, 1}, 0.0}, {}}, {{Polynomial{0, -1}, 0.0}, {}}};
    const CellComplex c = union_cell_decomposition({}, curves, {}, w);
    const auto at0 = c.locate({0, 0});
    ASSERT_TRUE(at0.has_value());
    EXPECT_EQ(c.element_of(*at0).first, 0);
    // Four member 1-cells leave the centre.
    const int v = c.element_of(*at0).second;
    int incident = 0;
    for (std::size_t e = 0; e < c.arrangement().edges().size(); ++e) {
        const auto& ed = c.arrangement().edges()[e];
        if (c.member(1, static_cast<int>(e)) && (ed.v0 == v || ed.v1 == v)) ++incident;
    }
    EXPECT_EQ(incident, 4);
    // Integer-offset subdivisions along each line.
    EXPECT_TRUE(c.contains({1.0, 1.0}));
    EXPECT_EQ(c.element_of(*c.locate({1.0, 1.0})).first, 0);
    auto in = [&](Point p) { return std::abs(p.y - p.x) <= 1e-9 || std::abs(p.y + p.x) <= 1e-9; };
    EXPECT_TRUE(partition_check(c, in, 2000, 5).ok());
}

TEST(Union, CurveOnlyOutsideOpenRegion) {
    const Box w{-3, 3, -3, 3};
    const TypeIRegion disk = open_region({below_graph(Polynomial{1, 0, -1}), {{Polynomial{1, 0, -1}, kPi}, false}}, w);
    const std::vector<CurvePiece> curves{{{Polynomial{0.5}, 0.0}, {}}};  // y = 0.5 crosses the lens twice
    const CellComplex c = union_cell_decomposition({}, curves, {disk}, w);
    const Arrangement& a = c.arrangement();
    for (std::size_t e = 0; e < a.edges().size(); ++e) {
        if (!c.member(1, static_cast<int>(e))) continue;
        const Point m = a.edges()[e].geom.midpoint();
        if (std::abs(m.y - 0.5) < 1e-9) EXPECT_FALSE(disk.interior_contains(m, 1e-6)) << m.x;
    }
    const double xc = std::sqrt(0.5);
    for (double sx : {-1.0, 1.0}) {
        const auto id = c.locate({sx * xc, 0.5});
        ASSERT_TRUE(id.has_value());
        EXPECT_EQ(c.element_of(*id).first, 0);
    }
    auto in = [&](Point p) { return union_contains({}, curves, {disk}, p); };
    EXPECT_TRUE(partition_check(c, in, 3000, 11).ok());
}

TEST(Union, PointOnCurveIsNotDuplicated) {
    const Box w{-2, 2, -2, 2};
    const std::vector<CurvePiece> curves{{{Polynomial{0, 0, 1}, 0.0}, {}}};
    const CellComplex with = union_cell_decomposition({{0.5, 0.25}}, curves, {}, w);
    const CellComplex without = union_cell_decomposition({}, curves, {}, w);
    EXPECT_EQ(with.count(0), without.count(0));
    const CellComplex off = union_cell_decomposition({{0.5, 1.0}}, curves, {}, w);
    EXPECT_EQ(off.count(0, true), without.count(0, true) + 1);
}
