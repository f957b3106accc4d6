#pragma once
/**
 * Planar arrangement of graph arcs inside an axis-aligned window.
 *
 * Input arcs are clipped to the window, split at every pairwise intersection,
 * snapped to shared vertices, deduplicated and linked into a half-edge
 * structure whose cycles give the bounded faces. The window frame is added as
 * synthetic edges unless disabled.
 */

#include "semialg/geometry.hpp"

#include <vector>

namespace semialg {

struct EdgeSource {
    Edge edge;
    int tag = -1;  ///< caller-defined provenance, carried onto every sub-edge
    bool synthetic = false;
};

class Arrangement {
public:
    struct Vertex {
        Point p;
    };
    struct ArcEdge {
        Edge geom;
        int v0 = -1;  ///< vertex at param().lo
        int v1 = -1;  ///< vertex at param().hi
        std::vector<int> tags;
        bool synthetic = false;
    };
    /// One traversal of an edge inside a face cycle.
    struct Side {
        int edge = -1;
        bool forward = true;
        friend bool operator==(const Side&, const Side&) = default;
    };
    struct Face {
        /// cycles[0] is the counterclockwise outer boundary, the rest are holes.
        std::vector<std::vector<Side>> cycles;
        Point interior;
        Box box;
        double area = 0.0;
    };
    struct Location {
        int dim = -1;
        int index = -1;
        bool found() const { return dim >= 0; }
        friend bool operator==(const Location&, const Location&) = default;
    };

    Arrangement() = default;

    static Arrangement build(const std::vector<EdgeSource>& edges, const std::vector<Point>& points, const Box& window,
                             double tol, bool frame = true);

    /// Reassembles a stored arrangement; recomputes boxes, areas and the search index.
    static Arrangement from_parts(const Box& window, double tol, std::vector<Vertex> vertices,
                                  std::vector<ArcEdge> edges, std::vector<Face> faces);

    const Box& window() const { return window_; }
    double tol() const { return tol_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<ArcEdge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }

    /// Element containing p; points within tol of a vertex or edge belong to it.
    Location locate(Point p) const;
    /// Strict interior test by ray parity over all cycles of the face.
    bool face_contains(int face, Point p) const;

    Point side_start(Side s) const;
    Point side_end(Side s) const;
    /// Polyline along a cycle; curved edges contribute `per_edge` segments.
    std::vector<Point> cycle_polyline(const std::vector<Side>& cycle, int per_edge = 16) const;
    /// Vertices of the face's outer cycle in order.
    std::vector<int> cycle_vertices(const std::vector<Side>& cycle) const;

private:
    void finish_faces();
    void build_index();
    Point interior_point(const Face& f) const;

    struct Grid {
        int n = 1;
        Box box;
        std::vector<std::vector<int>> cells;
        void reset(const Box& b, int count);
        void insert(const Box& b, int id);
        const std::vector<int>& at(Point p) const;
    };

    Box window_;
    double tol_ = 1e-9;
    std::vector<Vertex> vertices_;
    std::vector<ArcEdge> edges_;
    std::vector<Face> faces_;
    Grid vgrid_, egrid_, fgrid_;
};

}  // namespace semialg
