#pragma once
/**
 * Regions bounded by rotated polynomial graphs: splitting, intersections of
 * half-planes, classification of basic sets, boundary arrangements and cell
 * decompositions of finite unions.
 */

#include "semialg/cells.hpp"

#include <string>
#include <vector>

namespace semialg {

struct HalfPlane {
    RotatedGraph graph;
    bool strict = false;  ///< true: membership > 0, false: >= 0
};

/// One side of a region boundary: an arc traversed forward or backward.
struct Side {
    Edge edge;
    bool forward = true;
    int source = -1;  ///< index of the defining graph; -1 on the window frame
    bool synthetic = false;
    Point at_lo;  ///< shared vertex coordinates at param().lo / param().hi
    Point at_hi;

    Point start() const { return forward ? at_lo : at_hi; }
    Point end() const { return forward ? at_hi : at_lo; }
};

struct TypeIRegion {
    /// [0] is the counterclockwise outer boundary; any further ones are holes.
    std::vector<std::vector<Side>> boundary_components;
    std::vector<Point> vertices;  ///< side start points, component by component
    bool closed = true;
    Point interior;

    Box box() const;
    /// Strictly inside, by ray parity; points within tol of the boundary are not inside.
    bool interior_contains(Point p, double tol = 1e-9) const;
    double boundary_distance(Point p) const;
    /// Closed regions include their boundary (within tol), open ones exclude it.
    bool contains(Point p, double tol = 1e-9) const;
    double area() const;
};

struct SharedVertex {
    Point p;
    int a = -1;
    int b = -1;
};

struct TypeIDecomposition {
    std::vector<TypeIRegion> regions;
    std::vector<SharedVertex> shared_vertices;
    std::vector<RotatedGraph> graphs;  ///< defining graphs, indexed by Side::source
    Box window;
};

/// Window rectangle as a region with four synthetic sides.
TypeIRegion window_region(const Box& window);

struct SplitRegion {
    TypeIRegion region;
    int side = 0;  ///< +1 where membership(g) > 0, -1 where < 0
};

/// Cuts t along g. Throws OverlapSide when g runs along one of t's sides.
std::vector<SplitRegion> split_region_by_graph(const TypeIRegion& t, const RotatedGraph& g, const Box& window,
                                               int source = -1, double tol = 1e-9);

/// Regions of (intersection of hs) inside window. Duplicate half-planes are dropped.
TypeIDecomposition intersect_halfplanes(const std::vector<HalfPlane>& hs, const Box& window, double tol = 1e-9);

struct PropertyCheck {
    bool pass = true;
    std::vector<std::string> witnesses;
};

struct ValidationReport {
    PropertyCheck property[4];
    bool ok() const { return property[0].pass && property[1].pass && property[2].pass && property[3].pass; }
};

/// Structural checks: sides lie on defining graphs, adjacent sides lie on
/// distinct graphs, two regions share at most one vertex, no vertex joins three regions.
ValidationReport validate_decomposition(const TypeIDecomposition& d, double vertex_tol = 1e-7);

struct CurvePiece {
    RotatedGraph graph;
    CurveSpan span;
};

struct Classification {
    enum class Tag { Empty, FinitePoints, OpenPolynomialCurve, TypeIIRegions };
    Tag tag = Tag::Empty;
    std::vector<Point> points;
    std::vector<CurvePiece> curves;
    TypeIDecomposition regions;
};

const char* to_string(Classification::Tag t);

/// {g_1 = 0} and ... and {g_m = 0} and {f_1 > 0} and ... and {f_k > 0}. Curve
/// pieces and points are global; regions are clipped to window. Throws
/// DuplicateSet when two inputs define the same set.
Classification classify_basic_set(const std::vector<RotatedGraph>& curves, const std::vector<HalfPlane>& opens,
                                  const Box& window, double tol = 1e-9);

enum class Placement { In, Boundary, Out };

const char* to_string(Placement p);

struct PlaneArrangement {
    CellComplex complex;  ///< member = placed In
    std::vector<Placement> vertex_flags;
    std::vector<Placement> edge_flags;
    std::vector<Placement> face_flags;
    std::vector<TypeIRegion> faces;
};

/// Arrangement of all region boundaries in the window, each element placed
/// relative to the union of the regions.
PlaneArrangement arrange_boundaries(const std::vector<TypeIRegion>& regions, const Box& window, double tol = 1e-9);

/// Cell decomposition of points, open curve pieces and regions taken together.
CellComplex union_cell_decomposition(const std::vector<Point>& points, const std::vector<CurvePiece>& curves,
                                     const std::vector<TypeIRegion>& regions, const Box& window, double tol = 1e-9);

/// Membership in the union of the three ingredient lists.
bool union_contains(const std::vector<Point>& points, const std::vector<CurvePiece>& curves,
                    const std::vector<TypeIRegion>& regions, Point p, double tol = 1e-9);

/// Regions of every face of an arrangement (helper shared with the geodesic module).
TypeIRegion region_of_face(const Arrangement& arr, int face);

}  // namespace semialg
