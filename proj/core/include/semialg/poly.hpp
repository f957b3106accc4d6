#pragma once
/**
 * Univariate polynomials, real-root isolation and intersections of rotated
 * polynomial graphs.
 *
 * A RotatedGraph is the graph v = p(u) drawn in a frame rotated by theta:
 * local coordinates are u = cos(theta) x + sin(theta) y and
 * v = -sin(theta) x + cos(theta) y. Its membership value p(u) - v is
 * positive strictly below the graph (in the local frame), zero on it.
 */

#include "semialg/vec2.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace semialg {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> coeffs);
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial constant(double c) { return Polynomial({c}); }
    /// a + b x
    static Polynomial linear(double a, double b) { return Polynomial({a, b}); }

    /// Coefficients, low degree first. Empty for the zero polynomial.
    const std::vector<double>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double coeff(int i) const { return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0.0; }
    double max_abs_coeff() const;

    double operator()(double x) const;

    Polynomial derivative() const;
    /// p(inner(x))
    Polynomial compose(const Polynomial& inner) const;
    /// p(x) + c
    Polynomial shifted(double c) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double s, const Polynomial& a);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<double> coeffs_;
};

double eval(const Polynomial& p, double x);
Polynomial derivative(const Polynomial& p);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

enum class Multiplicity { Simple, SuspectedMultiple };

struct Root {
    Interval bracket;
    double value = 0.0;
    Multiplicity multiplicity = Multiplicity::Simple;
};

/// Sorted, pairwise disjoint brackets.
struct RootSet {
    std::vector<Root> roots;

    std::size_t size() const { return roots.size(); }
    bool empty() const { return roots.empty(); }
    std::vector<double> values() const;
};

inline constexpr double kDefaultRootTol = 1e-9;

/// Every real root of `p` inside `window`, bracketed to width <= tol. Roots
/// closer than tol are merged and flagged as suspected multiple. Throws
/// ErrorKind::ZeroPolynomial when p is identically zero.
RootSet isolate_real_roots(const Polynomial& p, Interval window, double tol = kDefaultRootTol);

/// Cauchy bound: every real root lies in [-bound, bound].
double root_bound(const Polynomial& p);

/// All real roots, wherever they are.
RootSet all_real_roots(const Polynomial& p, double tol = kDefaultRootTol);

struct RotatedGraph {
    Polynomial poly;
    double theta = 0.0;

    Rotation rotation() const { return Rotation::of(theta); }
    /// World point of local abscissa t.
    Point point_at(double t) const;
    /// World tangent (not normalized) at local abscissa t, pointing toward increasing t.
    Point tangent_at(double t) const;
    /// Local abscissa of the world point's projection onto the graph frame.
    double local_u(Point world) const;
};

/// poly(cos t x + sin t y) - (-sin t x + cos t y)
double membership(const RotatedGraph& g, Point p);

/// The same curve with its two sides exchanged: theta + pi with p(u) -> -p(-u).
/// Local abscissa t on g becomes -t.
RotatedGraph flipped(const RotatedGraph& g);

/// Normalizes an angle into [0, 2 pi).
double normalize_angle(double theta);

/// Local polynomial h(t) whose roots are the parameters t of `a` where a's
/// graph meets b's graph.
Polynomial composed_difference(const RotatedGraph& a, const RotatedGraph& b);

/// True when the two graphs are the same point set.
bool same_graph(const RotatedGraph& a, const RotatedGraph& b);

struct GraphHit {
    double t_a = 0.0;  ///< parameter on a (a's local abscissa)
    double t_b = 0.0;  ///< parameter on b
    Point point;
    Multiplicity multiplicity = Multiplicity::Simple;
};

struct Intersections {
    /// Set when the graphs coincide: the composition is identically zero.
    bool overlap_partial = false;
    std::vector<GraphHit> hits;
};

/// Intersections of a and b with a's parameter restricted to `window`.
Intersections graph_intersections(const RotatedGraph& a, const RotatedGraph& b, Interval window,
                                  double tol = kDefaultRootTol);

/// Graph of a straight line through p with direction d, as a rotated constant graph.
/// The parameter along it is p's local abscissa plus arclength.
RotatedGraph line_through(Point p, Point direction);

}  // namespace semialg
