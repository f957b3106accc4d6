#include "semialg/interaction.hpp"

#include "semialg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace semialg {

namespace {

struct Walker {
    const PiecewiseCurve& c;
    const CellComplex& complex;
    double resolution;
    std::vector<std::pair<int, Point>> cells;  // refined sequence of located cells

    Point at(double u) const {
        const auto i = std::min(static_cast<std::size_t>(u), c.pieces.size() - 1);
        return c.pieces[i].at(u - static_cast<double>(i));
    }

    int locate(double u) const {
        const Point p = at(u);
        const auto id = complex.locate(p);
        if (!id) {
            std::ostringstream os;
            os << "curve point (" << p.x << ", " << p.y << ") lies in no cell";
            throw Error(ErrorKind::CurveEscapesComplex, os.str());
        }
        return *id;
    }

    // Cells strictly between u0 (in c0) and u1 (in c1), appended in order.
    void refine(double u0, int c0, double u1, int c1, int depth) {
        if (depth > 60 || distance(at(u0), at(u1)) <= resolution) return;
        const double um = 0.5 * (u0 + u1);
        const int cm = locate(um);
        if (cm != c0) refine(u0, c0, um, cm, depth + 1);
        cells.push_back({cm, at(um)});
        if (cm != c1) refine(um, cm, u1, c1, depth + 1);
    }
};

struct Run {
    int cell;
    std::vector<Point> pts;
};

// Runs of the sampled sequence. An edge run that never leaves the tol
// neighbourhood of a neighbouring vertex run is an artifact of attribution
// (the curve went through the vertex at an angle) and is dropped.
std::vector<int> collapse_runs(const std::vector<std::pair<int, Point>>& seq, const CellComplex& complex) {
    std::vector<Run> runs;
    for (const auto& [id, p] : seq) {
        if (runs.empty() || runs.back().cell != id) runs.push_back({id, {}});
        runs.back().pts.push_back(p);
    }
    const Arrangement& arr = complex.arrangement();
    const double reach = 4.0 * complex.tol();
    auto vertex_of = [&](const Run& r) -> int {
        const auto [dim, idx] = complex.element_of(r.cell);
        return dim == 0 ? idx : -1;
    };
    auto spurious = [&](std::size_t i) {
        const auto [dim, idx] = complex.element_of(runs[i].cell);
        if (dim != 1) return false;
        const auto& e = arr.edges()[idx];
        for (std::size_t j : {i - 1, i + 1}) {
            if (j >= runs.size()) continue;
            const int v = vertex_of(runs[j]);
            if (v < 0 || (v != e.v0 && v != e.v1)) continue;
            const Point c = arr.vertices()[v].p;
            if (std::all_of(runs[i].pts.begin(), runs[i].pts.end(), [&](Point p) { return distance(p, c) <= reach; }))
                return true;
        }
        return false;
    };
    std::vector<char> drop(runs.size(), 0);
    for (std::size_t i = 0; i < runs.size(); ++i) drop[i] = spurious(i);
    std::vector<int> out;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (drop[i]) continue;
        if (out.empty() || out.back() != runs[i].cell) out.push_back(runs[i].cell);
    }
    return out;
}

}  // namespace

InteractionReport count_interactions(const PiecewiseCurve& c, const CellComplex& complex, double step, int cap) {
    if (!(step > 0.0)) throw Error(ErrorKind::ValidationError, "step must be positive");
    InteractionReport report;
    if (c.empty()) return report;

    Walker w{c, complex, 0.5 * complex.tol(), {}};
    double prev_u = 0.0;
    int prev_cell = w.locate(0.0);
    w.cells.push_back({prev_cell, w.at(0.0)});
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
        const int m = std::max(1, static_cast<int>(std::ceil(c.pieces[i].length() / step)));
        for (int k = 1; k <= m; ++k) {
            const double u = static_cast<double>(i) + static_cast<double>(k) / m;
            const int cell = w.locate(u);
            if (cell != prev_cell) w.refine(prev_u, prev_cell, u, cell, 0);
            w.cells.push_back({cell, w.at(u)});
            prev_u = u;
            prev_cell = cell;
        }
    }

    for (int id : collapse_runs(w.cells, complex)) {
        int& n = report.per_cell[id];
        if (++n >= cap) {
            report.finite = false;
            break;
        }
    }
    for (const auto& [id, n] : report.per_cell) {
        switch (complex.element_of(id).first) {
            case 0: report.max0 = std::max(report.max0, n); break;
            case 1: report.max1 = std::max(report.max1, n); break;
            default: report.max2 = std::max(report.max2, n); break;
        }
    }
    return report;
}

BoundsCheck check_bounds(const InteractionReport& r, const CellComplex& complex, int b0, int b1,
                         std::optional<int> b2) {
    BoundsCheck out;
    if (!r.finite) {
        out.pass = false;
        out.witnesses.push_back("interaction count reached the safety cap");
    }
    for (const auto& [id, n] : r.per_cell) {
        const int dim = complex.element_of(id).first;
        const int bound = dim == 0 ? b0 : dim == 1 ? b1 : b2.value_or(-1);
        if (bound < 0 || n <= bound) continue;
        out.pass = false;
        std::ostringstream os;
        os << dim << "-cell " << id << " met " << n << " times (bound " << bound << ")";
        out.witnesses.push_back(os.str());
    }
    return out;
}

}  // namespace semialg
