#pragma once

#include <stdexcept>
#include <string>

namespace semialg {

enum class ErrorKind {
    ZeroPolynomial,
    MixedSigns,
    EmptyWindow,
    DegenerateInterval,
    WindowMismatch,
    OverlapSide,
    DuplicateSet,
    ParallelTangents,
    NotBelowGraph,
    NotConvexIncreasing,
    OutsideRegion,
    Disconnected,
    Unreachable,
    CurveEscapesComplex,
    NonConvergence,
    ParseError,
    ValidationError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code and a machine-readable record.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace semialg
