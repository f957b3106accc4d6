#pragma once
/**
 * Brute-force references: grid shortest paths through a region given only by
 * a membership predicate, and arc length by quadrature.
 */

#include "semialg/geometry.hpp"

#include <functional>
#include <vector>

namespace semialg {

using Membership = std::function<bool(Point)>;

struct OracleConfig {
    Box window;             ///< sampled area
    int grid_n = 256;       ///< cells per axis
    int neighbor_radius = 6;
    int checkpoints = 8;    ///< interior samples tested on every hop
};

struct OraclePath {
    std::vector<Point> vertices;
    double length = 0.0;
    /// Conservative gap between this path and the true shortest length.
    double resolution_bound = 0.0;
};

/// 4 * window diameter / grid_n.
double oracle_resolution_bound(const OracleConfig& cfg);

/// Shortest polygonal path from a to b through grid nodes of cfg.window, every
/// hop checked at cfg.checkpoints interior points. Throws Unreachable.
OraclePath polygonal_shortest_path(const Membership& inside, Point a, Point b, const OracleConfig& cfg);

/// Integral of sqrt(1 + f'^2) over the interval.
double arc_length_quadrature(const Polynomial& f, Interval interval, double tol = 1e-12);

}  // namespace semialg
