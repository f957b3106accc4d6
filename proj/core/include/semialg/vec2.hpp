#pragma once

#include <cmath>

namespace semialg {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Rotation by `theta`: maps a graph's local frame into world coordinates.
struct Rotation {
    double c = 1.0;
    double s = 0.0;

    /// Quarter turns are snapped so axis-aligned lines stay exact.
    static Rotation of(double theta) {
        const double quarter = theta / 1.5707963267948966;
        const double k = std::round(quarter);
        if (std::abs(quarter - k) < 1e-14) {
            switch (((static_cast<long long>(k) % 4) + 4) % 4) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
            }
        }
        return {std::cos(theta), std::sin(theta)};
    }

    Point to_world(Point local) const { return {c * local.x - s * local.y, s * local.x + c * local.y}; }
    Point to_local(Point world) const { return {c * world.x + s * world.y, -s * world.x + c * world.y}; }
};

}  // namespace semialg
