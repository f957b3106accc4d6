#pragma once
// Counting how often a curve enters and leaves the cells of a complex.

#include "semialg/cells.hpp"
#include "semialg/geodesic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace semialg {

inline constexpr int kInteractionCap = 10000;

struct InteractionReport {
    std::map<int, int> per_cell;  ///< cell id -> number of maximal runs
    int max0 = 0;
    int max1 = 0;
    int max2 = 0;
    bool finite = true;  ///< false when some count reached the cap
};

/// Walks c at arc-length resolution `step`, refining every change of cell by
/// bisection down to the complex tolerance. Throws CurveEscapesComplex when a
/// point of the curve lies in no member cell.
InteractionReport count_interactions(const PiecewiseCurve& c, const CellComplex& complex, double step,
                                     int cap = kInteractionCap);

struct BoundsCheck {
    bool pass = true;
    std::vector<std::string> witnesses;
};

/// Passes iff max0 <= b0, max1 <= b1 and, when b2 is given, max2 <= b2. Without
/// b2 the 2-cells only need finite counts.
BoundsCheck check_bounds(const InteractionReport& r, const CellComplex& complex, int b0, int b1,
                         std::optional<int> b2 = std::nullopt);

}  // namespace semialg
