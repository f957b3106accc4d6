#pragma once
// SVG output for complexes and curves.

#include "semialg/cells.hpp"
#include "semialg/geodesic.hpp"

#include <string>
#include <vector>

namespace semialg {

struct RenderStyle {
    double width_px = 800.0;
    double step = 0.01;  ///< sampling step for arcs, in world units
    double edge_width = 1.5;
    double curve_width = 2.5;
    double vertex_radius = 3.0;
    std::string face_fill = "#9ecae1";
    double face_opacity = 0.35;
    std::string edge_stroke = "#3182bd";
    std::string vertex_fill = "#08519c";
    std::string curve_stroke = "#d62728";
};

/// One element per member cell (faces, then edges, then vertices), then the
/// curves, inside the window frame. Y points up.
std::string render_svg(const CellComplex& complex, const std::vector<PiecewiseCurve>& curves,
                       const RenderStyle& style = {});

}  // namespace semialg
