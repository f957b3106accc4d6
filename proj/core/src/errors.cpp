#include "semialg/errors.hpp"

namespace semialg {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::MixedSigns: return "MixedSigns";
    case ErrorKind::EmptyWindow: return "EmptyWindow";
    case ErrorKind::DegenerateInterval: return "DegenerateInterval";
    case ErrorKind::WindowMismatch: return "WindowMismatch";
    case ErrorKind::OverlapSide: return "OverlapSide";
    case ErrorKind::DuplicateSet: return "DuplicateSet";
    case ErrorKind::ParallelTangents: return "ParallelTangents";
    case ErrorKind::NotBelowGraph: return "NotBelowGraph";
    case ErrorKind::NotConvexIncreasing: return "NotConvexIncreasing";
    case ErrorKind::OutsideRegion: return "OutsideRegion";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::CurveEscapesComplex: return "CurveEscapesComplex";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

}  // namespace semialg
