#include "semialg/errors.hpp"
#include "semialg/interaction.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace semialg;

namespace {

PiecewiseCurve polyline(const std::vector<Point>& pts) {
    PiecewiseCurve c;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) c.pieces.push_back(PathPiece::segment(pts[i], pts[i + 1]));
    return c;
}

int count_of(const InteractionReport& r, int id) {
    const auto it = r.per_cell.find(id);
    return it == r.per_cell.end() ? 0 : it->second;
}

PiecewiseCurve spiral(Point centre, int turns_x6, double r0, double shrink) {
    std::vector<Point> pts;
    for (int k = 0; k <= turns_x6; ++k) {
        const double a = 0.1 + k * std::numbers::pi / 3;
        const double r = r0 - shrink * k;
        pts.push_back({centre.x + r * std::cos(a), centre.y + r * std::sin(a)});
    }
    return polyline(pts);
}

}  // namespace

TEST(Interaction, SegmentInsideOneSquare) {
    const CellComplex g = grid_decomposition({0, 3, 0, 3}, 1.0);
    const InteractionReport r = count_interactions(polyline({{1.2, 1.5}, {1.8, 1.4}}), g, 0.05);
    ASSERT_EQ(r.per_cell.size(), 1u);
    const int face = *g.locate({1.5, 1.5});
    EXPECT_EQ(count_of(r, face), 1);
    EXPECT_EQ(r.max2, 1);
    EXPECT_EQ(r.max1, 0);
    EXPECT_TRUE(r.finite);
}

TEST(Interaction, SegmentAcrossColumns) {
    const CellComplex g = grid_decomposition({0, 3, 0, 3}, 1.0);
    const InteractionReport r = count_interactions(polyline({{0.5, 0.5}, {2.5, 0.6}}), g, 0.1);
    EXPECT_EQ(r.per_cell.size(), 5u);
    for (Point p : {Point{0.5, 0.5}, Point{1.5, 0.5}, Point{2.5, 0.5}, Point{1.0, 0.55}, Point{2.0, 0.58}})
        EXPECT_EQ(count_of(r, *g.locate(p)), 1) << p.x;
    EXPECT_TRUE(check_bounds(r, g, 1, 1, 1).pass);
}

TEST(Interaction, ThroughAVertex) {
    const CellComplex g = grid_decomposition({0, 2, 0, 2}, 1.0);
    const InteractionReport r = count_interactions(polyline({{0.3, 0.3}, {1.7, 1.7}}), g, 0.1);
    const int v = *g.locate({1, 1});
    EXPECT_EQ(g.element_of(v).first, 0);
    EXPECT_EQ(count_of(r, v), 1);
    EXPECT_EQ(r.per_cell.size(), 3u);
}

TEST(Interaction, AlongEdgeThenBackThroughFace) {
    const CellComplex g = grid_decomposition({0, 2, 0, 2}, 1.0);
    // Run along the edge y = 1, dip into the square below and come back up to it.
    const InteractionReport r = count_interactions(polyline({{0.2, 1.0}, {0.8, 1.0}, {0.5, 0.7}, {0.3, 1.0}}), g, 0.05);
    const int edge = *g.locate({0.5, 1.0});
    const int face = *g.locate({0.5, 0.5});
    EXPECT_EQ(g.element_of(edge).first, 1);
    EXPECT_EQ(count_of(r, edge), 2);
    EXPECT_EQ(count_of(r, face), 1);
    EXPECT_EQ(r.per_cell.size(), 2u);
}

TEST(Interaction, SpiralBreaksTheBounds) {
    const CellComplex g = grid_decomposition({0, 2, 0, 2}, 1.0);
    const InteractionReport r = count_interactions(spiral({1, 1}, 18, 0.8, 0.03), g, 0.02);
    EXPECT_GE(r.max1, 3);
    const BoundsCheck b = check_bounds(r, g, 1, 2);
    EXPECT_FALSE(b.pass);
    ASSERT_FALSE(b.witnesses.empty());
    EXPECT_NE(b.witnesses.front().find("1-cell"), std::string::npos);
}

TEST(Interaction, CapMarksInfinite) {
    const CellComplex g = grid_decomposition({0, 2, 0, 2}, 1.0);
    const InteractionReport r = count_interactions(spiral({1, 1}, 18, 0.8, 0.03), g, 0.02, 3);
    EXPECT_FALSE(r.finite);
    EXPECT_FALSE(check_bounds(r, g, 100, 100).pass);
}

TEST(Interaction, EscapingCurveRaises) {
    const CellComplex g = grid_decomposition({0, 1, 0, 1}, 0.5);
    try {
        count_interactions(polyline({{0.5, 0.5}, {1.5, 0.5}}), g, 0.1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CurveEscapesComplex);
    }
    EXPECT_THROW(count_interactions(polyline({{0.1, 0.1}, {0.2, 0.2}}), g, 0.0), Error);
}

TEST(Interaction, WorkedGeodesicAgainstBricks) {
    const Polynomial f{0, 0, 1};
    const CellComplex bricks = brick_decomposition(f, {-1.1, 1.1, -0.5, 0.6}, 0.25);
    const PiecewiseCurve c = geodesic_below_graph(f, {-1, 0.5}, {1, 0.5});
    const InteractionReport r = count_interactions(c, bricks, 0.01);
    EXPECT_TRUE(r.finite);
    EXPECT_LE(r.max0, 1);
    EXPECT_LE(r.max1, 2);
    EXPECT_GT(r.max0, 0);  // the arc runs through graph vertices
    EXPECT_TRUE(check_bounds(r, bricks, 1, 2).pass);
}

TEST(Interaction, ReversalKeepsCounts) {
    testkit::Gen gen(31);
    for (int trial = 0; trial < 10; ++trial) {
        const Polynomial f = gen.poly(gen.integer(2, 3), 1.0);
        const double xa = gen.uniform(-1.5, -0.5), xb = gen.uniform(0.5, 1.5);
        const Point a{xa, f(xa) - gen.uniform(0.0, 0.5)}, b{xb, f(xb) - gen.uniform(0.0, 0.5)};
        double lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
        for (int i = 0; i <= 100; ++i) {
            const double y = f(xa + (xb - xa) * i / 100.0);
            lo = std::min(lo, y);
            hi = std::max(hi, y);
        }
        const CellComplex bricks = brick_decomposition(f, {xa - 0.1, xb + 0.1, lo - 0.5, hi + 0.1}, 0.5);
        const PiecewiseCurve c = geodesic_below_graph(f, a, b);
        const InteractionReport fwd = count_interactions(c, bricks, 0.01);
        const InteractionReport bwd = count_interactions(c.reversed(), bricks, 0.01);
        EXPECT_EQ(fwd.per_cell, bwd.per_cell) << "trial " << trial;
        EXPECT_TRUE(check_bounds(fwd, bricks, 1, 2).pass) << "trial " << trial;
    }
}

TEST(Interaction, HalvingStepKeepsCounts) {
    const Polynomial f{0.5, 0.2, -0.3, 0.4};
    const CellComplex bricks = brick_decomposition(f, {-1.6, 1.6, -3.0, 2.5}, 0.5);
    const PiecewiseCurve c = geodesic_below_graph(f, {-1.5, -2.2}, {1.5, 1.0});
    const InteractionReport coarse = count_interactions(c, bricks, 0.04);
    const InteractionReport fine = count_interactions(c, bricks, 0.02);
    for (const auto& [id, n] : coarse.per_cell) EXPECT_LE(n, count_of(fine, id));
    EXPECT_EQ(coarse.max1, fine.max1);
}
