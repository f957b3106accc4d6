#pragma once
/**
 * Cell complexes and the decompositions built on them.
 *
 * A CellComplex keeps the whole arrangement of its window. Elements inside the
 * decomposed set are its cells (`member`); the rest are kept so point location
 * stays total. Cells created only because the window cut something off are
 * flagged `clipped`.
 */

#include "semialg/arrangement.hpp"

#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace semialg {

using Mask = std::function<bool(Point)>;

struct Cell {
    int id = -1;
    int dim = 0;
    bool clipped = false;
};

class CellComplex {
public:
    CellComplex() = default;
    CellComplex(Arrangement arr, std::vector<char> vmember, std::vector<char> emember, std::vector<char> fmember);
    static CellComplex from_mask(Arrangement arr, const Mask& mask);

    const Box& window() const { return arr_.window(); }
    const Arrangement& arrangement() const { return arr_; }
    double tol() const { return arr_.tol(); }

    bool member(int dim, int index) const { return member_[dim][index] != 0; }
    bool clipped(int dim, int index) const { return clipped_[dim][index] != 0; }
    /// Marks a vertex as a window artifact; edges touching it follow.
    void mark_clipped_vertex(int v);

    int id_of(int dim, int index) const;
    std::pair<int, int> element_of(int id) const;  ///< (dim, index)

    std::vector<Cell> cells() const;
    std::size_t count(int dim, bool include_clipped = true) const;
    /// Member cells in the closure of cell `id`, excluding itself.
    std::vector<int> boundary(int id) const;

    /// Member cell containing p, using the arrangement's tol attribution.
    std::optional<int> locate(Point p) const;
    bool contains(Point p) const { return locate(p).has_value(); }

    /// Non-synthetic edges, for rebuilding inside another arrangement.
    std::vector<EdgeSource> edge_sources() const;
    /// Member vertices with no incident edge.
    std::vector<Point> isolated_points() const;

private:
    void compute_clipped();

    Arrangement arr_;
    std::vector<char> member_[3];
    std::vector<char> clipped_[3];
};

/// Brick pattern below y = f(x): graph 0-cells at multiples of spacing, strict
/// inflections and local minima; vertical rays down; per-column rungs spaced
/// below the column minimum. Throws EmptyWindow when the window is strictly above the graph.
CellComplex brick_decomposition(const Polynomial& f, const Box& window, double spacing = 1.0, double tol = 1e-9);

/// The open set y < f(x): brick pattern without the graph, with copies of the
/// graph shifted down by spacing / 2^n in every column until the shift drops below `resolution`.
CellComplex open_halfplane_decomposition(const Polynomial& f, const Box& window, double spacing = 1.0,
                                         double resolution = 1e-4, double tol = 1e-9);

/// Either pattern for a rotated half-plane {membership(g, .) >= 0} or {> 0}.
CellComplex halfplane_decomposition(const RotatedGraph& g, bool strict, const Box& window, double spacing = 1.0,
                                    double resolution = 1e-4, double tol = 1e-9);

enum class CurveKind { Whole, HalfOpen, Bounded };

const char* to_string(CurveKind k);

/// An open piece of a rotated graph in its local parameter: all of it, the
/// ray t > x0 (direction +1) or t < x0 (direction -1), or (x0, x1).
struct CurveSpan {
    CurveKind kind = CurveKind::Whole;
    double x0 = 0.0;
    double x1 = 0.0;
    int direction = 1;

    bool contains(double t) const;
    friend bool operator==(const CurveSpan&, const CurveSpan&) = default;
};

/// One-dimensional complex on an open curve piece, restricted to the parameter window.
CellComplex open_curve_decomposition(const RotatedGraph& g, const CurveSpan& span, Interval window,
                                     double resolution = 1e-4, double tol = 1e-9);

/// Axis-parallel lines through origin + k * spacing.
CellComplex grid_decomposition(const Box& window, double spacing, Point origin = {0, 0}, double tol = 1e-9);

/// Common refinement of a and b, keeping cells in both and inside region_mask.
CellComplex overlay(const CellComplex& a, const CellComplex& b, const Mask& region_mask);

/// Rebuilds c's cells in another window, keeping those inside mask.
CellComplex rewindow(const CellComplex& c, const Box& window, const Mask& mask);

struct PartitionReport {
    int samples = 0;
    int in_set = 0;
    int violations = 0;
    std::vector<Point> witnesses;
    bool ok() const { return violations == 0; }
};

/// Samples the window and checks each point in `set` lies in exactly one cell,
/// and each point outside lies in none. Attribution follows the tol rule:
/// vertices first, then edges, then faces.
PartitionReport partition_check(const CellComplex& c, const Mask& set, int samples, std::uint64_t seed);

/// Sampled boundary points of every member 2-cell lie on a member 0- or 1-cell.
PartitionReport closure_check(const CellComplex& c, int per_edge = 8);

}  // namespace semialg
