#pragma once
// Scene files: a window plus half-planes, open curve pieces and points.
//
// The set described by a scene is the union of the region cut out by all the
// half-planes, the curve pieces and the points.

#include "semialg/regions.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace semialg {

struct SceneHalfPlane {
    std::vector<double> coeffs;  ///< low to high
    double theta = 0.0;
    bool strict = false;

    HalfPlane to_halfplane() const { return {{Polynomial(coeffs), theta}, strict}; }
};

struct SceneCurve {
    std::vector<double> coeffs;
    double theta = 0.0;
    CurveKind kind = CurveKind::Whole;
    /// whole: []; half_open: [x0, direction]; bounded: [x0, x1]
    std::vector<double> params;

    CurvePiece to_piece() const;
};

struct SceneTolerances {
    double tol = 1e-9;
    double eps_len = 1e-9;
    double eps_geom = 1e-9;
    double spacing = 1.0;
    double resolution = 1e-4;
};

struct Scene {
    std::vector<SceneHalfPlane> halfplanes;
    std::vector<SceneCurve> curves;
    std::vector<Point> points;
    Box window;
    SceneTolerances tolerances;
    std::uint64_t seed = 0;
    std::vector<std::string> warnings;  ///< not serialized
};

/// Throws ParseError for malformed JSON or wrongly typed fields and
/// ValidationError listing every violated invariant.
Scene parse_scene(std::string_view text);
std::string serialize_scene(const Scene& s);

/// Regions of the intersection of the scene's half-planes; empty without half-planes.
TypeIDecomposition scene_regions(const Scene& s);
/// Cell decomposition of the whole scene set.
CellComplex scene_complex(const Scene& s);
/// Membership in the scene set; the regions are built once.
Mask scene_mask(const Scene& s);
/// The basic set {curves = 0} and {half-planes > 0}.
Classification scene_classification(const Scene& s);

}  // namespace semialg
