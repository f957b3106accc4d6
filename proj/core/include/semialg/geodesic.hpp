#pragma once
/**
 * Shortest curves below a graph and inside type-I regions, plus the zigzag
 * tangent curve machinery used to approximate them.
 */

#include "semialg/geometry.hpp"
#include "semialg/regions.hpp"

#include <vector>

namespace semialg {

struct Tolerances {
    double eps_len = 1e-9;
    double eps_geom = 1e-9;
    int max_refine = 10000;
};

/// A straight segment p -> q, or the graph arc from param `from` to `to`.
struct PathPiece {
    enum class Kind { Segment, Arc };
    Kind kind = Kind::Segment;
    Point p, q;
    RotatedGraph graph;
    double from = 0.0;
    double to = 0.0;

    static PathPiece segment(Point a, Point b);
    static PathPiece arc(RotatedGraph g, double from, double to);

    bool is_arc() const { return kind == Kind::Arc; }
    Point start() const;
    Point end() const;
    Point at(double s) const;  ///< s in [0, 1], start to end
    /// Unit direction of travel at s.
    Point direction(double s) const;
    Interval param() const { return {std::min(from, to), std::max(from, to)}; }
    double length(double tol = 1e-11) const;
};

struct PiecewiseCurve {
    std::vector<PathPiece> pieces;

    bool empty() const { return pieces.empty(); }
    Point start() const { return pieces.front().start(); }
    Point end() const { return pieces.back().end(); }
    double length(double tol = 1e-11) const;
    /// Largest gap between consecutive piece endpoints.
    double continuity_gap() const;
    PiecewiseCurve reversed() const;
    std::vector<Point> polyline(int per_arc = 64) const;
};

/// Intersection of the tangent lines to f at a and b.
Point tangent_apex(const Polynomial& f, double a, double b, double eps = 1e-12);

/// Tangent points s_0 < ... < s_n on a convex arc; apex j sits between s_{j-1} and s_j.
struct ZigzagCurve {
    Polynomial f;
    std::vector<double> tangent_abscissae;

    Point tangent_point(int j) const;
    Point apex(int j) const;  ///< j = 1 .. n
    std::size_t apex_count() const { return tangent_abscissae.empty() ? 0 : tangent_abscissae.size() - 1; }
    /// A, apex_1, s_1, apex_2, ..., B.
    std::vector<Point> polyline() const;
    double length() const;
    /// Corners of the polyline. Tangent points sit on a straight run and don't count.
    int vertex_count() const;
};

ZigzagCurve make_zigzag(const Polynomial& f, std::vector<double> abscissae);

/// Replaces a polygonal curve below a convex arc of f by a zigzag tangent curve
/// that is no longer and has no more vertices. Endpoints must lie on the graph
/// at the ends of `arc`. Throws NotBelowGraph or NotConvexIncreasing.
ZigzagCurve zigzagify(const std::vector<Point>& poly_curve, const Polynomial& f, Interval arc,
                      const Tolerances& tol = {});

/// Inserts a tangent point at the middle abscissa of every consecutive pair.
ZigzagCurve refine_zigzag(const ZigzagCurve& z);

struct TriangleGap {
    double inscribed = 0.0;   ///< L_Q
    double zigzag = 0.0;      ///< L_ZQ
    double triangles = 0.0;   ///< L_triangle-Q
    double g_sum = 0.0;       ///< sum (s_j - s_{j-1}) (g(s_j) - g(secant slope))
    double identity_residual = 0.0;
};

/// Lengths of the inscribed, zigzag and triangle-completed polylines over Q.
/// Throws NotConvexIncreasing unless f is convex up and increasing on [Q.front(), Q.back()].
TriangleGap triangle_completion_gap(const Polynomial& f, const std::vector<double>& q);

/// Shortest curve from a to b inside {y <= f(x)}. Throws OutsideRegion.
PiecewiseCurve geodesic_below_graph(const Polynomial& f, Point a, Point b, const Tolerances& tol = {});

/// Shortest curve from a to b inside the closed region t. Throws OutsideRegion
/// or Disconnected.
PiecewiseCurve geodesic_in_region(const TypeIRegion& t, Point a, Point b, const Tolerances& tol = {});

struct StructureReport {
    bool alternates = true;
    bool arcs_convex_up = true;
    double tangency_residual = 0.0;
    bool ok(double tangency_tol = 1e-6) const { return alternates && arcs_convex_up && tangency_residual <= tangency_tol; }
};

/// Checks segment/arc alternation, convexity of every arc in its own frame and
/// tangency at every segment/arc junction.
StructureReport geodesic_structure(const PiecewiseCurve& c);

}  // namespace semialg
