#include "semialg/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace semialg {

namespace {

struct Canvas {
    Box window;
    double scale = 1.0;

    double px(double x) const { return (x - window.xmin) * scale; }
    double py(double y) const { return (window.ymax - y) * scale; }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string xy(const Canvas& cv, Point p) { return num(cv.px(p.x)) + "," + num(cv.py(p.y)); }

std::vector<Point> sample_edge(const Edge& e, double step) {
    if (e.straight()) return e.sample(1);
    const int n = std::clamp(static_cast<int>(std::ceil(e.length() / step)), 2, 4000);
    return e.sample(n);
}

std::vector<Point> sample_piece(const PathPiece& p, double step) {
    if (!p.is_arc()) return {p.start(), p.end()};
    const int n = std::clamp(static_cast<int>(std::ceil(p.length() / step)), 2, 4000);
    std::vector<Point> out;
    for (int i = 0; i <= n; ++i) out.push_back(p.at(static_cast<double>(i) / n));
    return out;
}

}  // namespace

std::string render_svg(const CellComplex& complex, const std::vector<PiecewiseCurve>& curves, const RenderStyle& style) {
    const Arrangement& arr = complex.arrangement();
    Canvas cv{complex.window(), style.width_px / std::max(complex.window().width(), 1e-300)};
    const double height = complex.window().height() * cv.scale;
    const double step = style.step > 0.0 ? style.step : 0.01;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(style.width_px) << "\" height=\""
       << num(height) << "\" viewBox=\"0 0 " << num(style.width_px) << " " << num(height) << "\">\n";
    os << "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"" << num(style.width_px) << "\" height=\"" << num(height)
       << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

    os << "<g id=\"faces\">\n";
    for (std::size_t f = 0; f < arr.faces().size(); ++f) {
        if (!complex.member(2, static_cast<int>(f))) continue;
        std::string d;
        for (const auto& cyc : arr.faces()[f].cycles) {
            std::vector<Point> pts;
            for (const auto& s : cyc) {
                std::vector<Point> e = sample_edge(arr.edges()[s.edge].geom, step);
                if (!s.forward) std::reverse(e.begin(), e.end());
                pts.insert(pts.end(), e.begin() + (pts.empty() ? 0 : 1), e.end());
            }
            for (std::size_t i = 0; i < pts.size(); ++i) d += (i == 0 ? "M" : " L") + xy(cv, pts[i]);
            if (!pts.empty()) d += " Z ";
        }
        os << "<path class=\"cell dim-2\" id=\"c" << complex.id_of(2, static_cast<int>(f)) << "\" d=\"" << d
           << "\" fill=\"" << style.face_fill << "\" fill-opacity=\"" << num(style.face_opacity)
           << "\" fill-rule=\"evenodd\" stroke=\"none\"/>\n";
    }
    os << "</g>\n<g id=\"edges\">\n";
    for (std::size_t e = 0; e < arr.edges().size(); ++e) {
        if (!complex.member(1, static_cast<int>(e))) continue;
        os << "<polyline class=\"cell dim-1\" id=\"c" << complex.id_of(1, static_cast<int>(e)) << "\" points=\"";
        const std::vector<Point> pts = sample_edge(arr.edges()[e].geom, step);
        for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << xy(cv, pts[i]);
        os << "\" fill=\"none\" stroke=\"" << style.edge_stroke << "\" stroke-width=\"" << num(style.edge_width)
           << "\"/>\n";
    }
    os << "</g>\n<g id=\"vertices\">\n";
    for (std::size_t v = 0; v < arr.vertices().size(); ++v) {
        if (!complex.member(0, static_cast<int>(v))) continue;
        const Point p = arr.vertices()[v].p;
        os << "<circle class=\"cell dim-0\" id=\"c" << complex.id_of(0, static_cast<int>(v)) << "\" cx=\"" << num(cv.px(p.x))
           << "\" cy=\"" << num(cv.py(p.y)) << "\" r=\"" << num(style.vertex_radius) << "\" fill=\"" << style.vertex_fill
           << "\"/>\n";
    }
    os << "</g>\n<g id=\"curves\">\n";
    for (const auto& c : curves) {
        os << "<polyline class=\"curve\" points=\"";
        bool first = true;
        for (const auto& piece : c.pieces) {
            const std::vector<Point> pts = sample_piece(piece, step);
            for (std::size_t i = first ? 0 : 1; i < pts.size(); ++i) {
                os << (first && i == 0 ? "" : " ") << xy(cv, pts[i]);
            }
            first = false;
        }
        os << "\" fill=\"none\" stroke=\"" << style.curve_stroke << "\" stroke-width=\"" << num(style.curve_width)
           << "\" stroke-linejoin=\"round\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace semialg
