#pragma once
/**
 * Edges of planar subdivisions. Every edge, straight or curved, is an arc of a
 * RotatedGraph over a parameter interval in the graph's local frame.
 */

#include "semialg/poly.hpp"

#include <vector>

namespace semialg {

struct Box {
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double diameter() const;
    bool empty() const { return !(xmin <= xmax && ymin <= ymax); }
    bool contains(Point p, double tol = 0.0) const {
        return p.x >= xmin - tol && p.x <= xmax + tol && p.y >= ymin - tol && p.y <= ymax + tol;
    }
    bool intersects(const Box& o, double tol = 0.0) const {
        return o.xmin <= xmax + tol && xmin <= o.xmax + tol && o.ymin <= ymax + tol && ymin <= o.ymax + tol;
    }
    Box expanded(double d) const { return {xmin - d, xmax + d, ymin - d, ymax + d}; }
    void include(Point p);
    static Box around(Point p) { return {p.x, p.x, p.y, p.y}; }
    std::vector<Point> corners() const { return {{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}}; }
    friend bool operator==(const Box&, const Box&) = default;
};

class Edge {
public:
    Edge() = default;
    /// Arc of g over param, which must satisfy lo < hi.
    Edge(RotatedGraph g, Interval param);
    /// Straight segment from a to b (a != b).
    static Edge segment(Point a, Point b);

    const RotatedGraph& graph() const { return graph_; }
    const Interval& param() const { return param_; }
    const Box& box() const { return box_; }
    bool straight() const { return graph_.poly.degree() <= 0; }

    Point point(double t) const { return graph_.point_at(t); }
    Point tangent(double t) const { return graph_.tangent_at(t); }
    Point start() const { return point(param_.lo); }
    Point end() const { return point(param_.hi); }
    Point midpoint() const { return point(param_.mid()); }

    /// World coordinates as polynomials of the parameter.
    Polynomial x_poly() const;
    Polynomial y_poly() const;

    Edge sub(double lo, double hi) const { return Edge(graph_, {lo, hi}); }

    struct Closest {
        double t = 0.0;
        Point point;
        double distance = 0.0;
    };
    Closest closest(Point q) const;
    double distance(Point q) const { return closest(q).distance; }

    double length(double tol = 1e-11) const;
    /// n + 1 points at uniform parameter steps (2 for straight edges when n is 0).
    std::vector<Point> sample(int n) const;

private:
    RotatedGraph graph_;
    Interval param_;
    Box box_;
};

/// Number of times the boundary arc crosses the horizontal ray from p toward +x.
/// `a` and `b` are the arc's endpoint coordinates as stored by the owning
/// subdivision, so adjacent arcs classify their shared vertex identically.
int ray_crossings(const Edge& e, Point a, Point b, Point p);

/// Parameters where the arc meets the horizontal line y = c, strictly inside its range.
std::vector<double> horizontal_hits(const Edge& e, double c);

}  // namespace semialg
