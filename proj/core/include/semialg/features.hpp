#pragma once

#include "semialg/poly.hpp"

#include <vector>

namespace semialg {

/// Distinguished abscissae of a polynomial graph, all in its local frame.
struct CriticalProfile {
    std::vector<double> strict_inflections;  ///< f'' changes sign
    std::vector<double> local_minima;        ///< f' changes sign from - to +
    std::vector<double> f_prime_zeros;
};

enum class ArcClass { ConvexDown, ConvexUpIncreasing, ConvexUpDecreasing, Linear };

const char* to_string(ArcClass c);

CriticalProfile critical_profile(const Polynomial& f, Interval window, double tol = kDefaultRootTol);

/// Sign class of f on an open arc free of f' and f'' zeros. Throws
/// ErrorKind::MixedSigns when the arc straddles one.
ArcClass classify_arc(const Polynomial& f, Interval arc, double tol = kDefaultRootTol);

/// Every abscissa in the profile, sorted and deduplicated within tol.
std::vector<double> profile_breakpoints(const CriticalProfile& profile, double tol = kDefaultRootTol);

}  // namespace semialg
