#pragma once
// JSON forms of complexes, curves and classifications.

#include "semialg/cells.hpp"
#include "semialg/geodesic.hpp"
#include "semialg/regions.hpp"

#include <string>
#include <string_view>

namespace semialg {

std::string serialize_complex(const CellComplex& c);
/// Throws ParseError.
CellComplex parse_complex(std::string_view text);

/// Pieces plus the total length.
std::string serialize_curve(const PiecewiseCurve& c);
PiecewiseCurve parse_curve(std::string_view text);

std::string serialize_classification(const Classification& c);

}  // namespace semialg
