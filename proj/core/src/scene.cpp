#include "semialg/scene.hpp"

#include "json_util.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace semialg {

using namespace jsonio;

namespace {

CurveKind curve_kind(const std::string& s, const std::string& path) {
    if (s == "whole") return CurveKind::Whole;
    if (s == "half-open") return CurveKind::HalfOpen;
    if (s == "bounded") return CurveKind::Bounded;
    fail(path, "expected whole, half-open or bounded");
}

double take_theta(const json& j, const std::string& path, Scene& s) {
    const double theta = number(j, path);
    if (!std::isfinite(theta)) return theta;
    if (theta < 0.0 || theta >= 2 * std::numbers::pi) {
        const double t = normalize_angle(theta);
        std::ostringstream os;
        os.precision(17);
        os << path << ": theta " << theta << " normalized to " << t;
        s.warnings.push_back(os.str());
        return t;
    }
    return theta;
}

void check_finite(const std::vector<double>& v, const std::string& path, std::vector<std::string>& problems) {
    for (double x : v)
        if (!std::isfinite(x)) {
            problems.push_back(path + " has a non-finite entry");
            return;
        }
}

}  // namespace

CurvePiece SceneCurve::to_piece() const {
    CurveSpan span;
    span.kind = kind;
    if (kind == CurveKind::HalfOpen) {
        span.x0 = params.at(0);
        span.direction = params.at(1) < 0 ? -1 : 1;
    } else if (kind == CurveKind::Bounded) {
        span.x0 = params.at(0);
        span.x1 = params.at(1);
    }
    return {{Polynomial(coeffs), theta}, span};
}

Scene parse_scene(std::string_view text) {
    const json doc = parse_document(text);
    object(doc, "", {"halfplanes", "curves", "points", "window", "tolerances", "seed"});
    Scene s;
    std::vector<std::string> problems;

    if (doc.contains("halfplanes")) {
        const json& hs = array(doc["halfplanes"], "halfplanes");
        for (std::size_t i = 0; i < hs.size(); ++i) {
            const std::string path = index("halfplanes", i);
            object(hs[i], path, {"coeffs", "theta", "strict"});
            SceneHalfPlane h;
            if (!hs[i].contains("coeffs")) fail(join(path, "coeffs"), "missing");
            h.coeffs = numbers(hs[i]["coeffs"], join(path, "coeffs"));
            if (hs[i].contains("theta")) h.theta = take_theta(hs[i]["theta"], join(path, "theta"), s);
            if (hs[i].contains("strict")) h.strict = boolean(hs[i]["strict"], join(path, "strict"));
            if (h.coeffs.empty()) problems.push_back(path + ".coeffs is empty");
            check_finite(h.coeffs, path + ".coeffs", problems);
            if (!std::isfinite(h.theta)) problems.push_back(path + ".theta is not finite");
            s.halfplanes.push_back(std::move(h));
        }
    }

    if (doc.contains("curves")) {
        const json& cs = array(doc["curves"], "curves");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const std::string path = index("curves", i);
            object(cs[i], path, {"coeffs", "theta", "kind", "params"});
            SceneCurve c;
            if (!cs[i].contains("coeffs")) fail(join(path, "coeffs"), "missing");
            c.coeffs = numbers(cs[i]["coeffs"], join(path, "coeffs"));
            if (cs[i].contains("theta")) c.theta = take_theta(cs[i]["theta"], join(path, "theta"), s);
            if (cs[i].contains("kind")) c.kind = curve_kind(string(cs[i]["kind"], join(path, "kind")), join(path, "kind"));
            if (cs[i].contains("params")) c.params = numbers(cs[i]["params"], join(path, "params"));
            if (c.coeffs.empty()) problems.push_back(path + ".coeffs is empty");
            check_finite(c.coeffs, path + ".coeffs", problems);
            check_finite(c.params, path + ".params", problems);
            if (!std::isfinite(c.theta)) problems.push_back(path + ".theta is not finite");
            const std::size_t want = c.kind == CurveKind::Whole ? 0 : 2;
            if (c.params.size() != want) {
                problems.push_back(path + ".params needs " + std::to_string(want) + " entries for kind " +
                                   to_string(c.kind));
            } else if (c.kind == CurveKind::HalfOpen && std::abs(c.params[1]) != 1.0) {
                problems.push_back(path + ".params[1] must be 1 or -1");
            } else if (c.kind == CurveKind::Bounded && !(c.params[0] < c.params[1])) {
                problems.push_back(path + ".params must satisfy x0 < x1");
            }
            s.curves.push_back(std::move(c));
        }
    }

    if (doc.contains("points")) {
        const json& ps = array(doc["points"], "points");
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const Point p = point(ps[i], index("points", i));
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) problems.push_back(index("points", i) + " is not finite");
            s.points.push_back(p);
        }
    }

    if (doc.contains("window")) {
        s.window = box(doc["window"], "window");
        if (!(s.window.xmin < s.window.xmax && s.window.ymin < s.window.ymax) || !std::isfinite(s.window.width()) ||
            !std::isfinite(s.window.height()))
            problems.push_back("window must satisfy xmin < xmax and ymin < ymax");
    } else {
        problems.push_back("window is required");
    }

    if (doc.contains("tolerances")) {
        const json& t = object(doc["tolerances"], "tolerances", {"tol", "eps_len", "eps_geom", "spacing", "resolution"});
        SceneTolerances& st = s.tolerances;
        auto read = [&](const char* key, double& dst) {
            if (!t.contains(key)) return;
            dst = number(t[key], join("tolerances", key));
            if (!(dst > 0.0) || !std::isfinite(dst)) problems.push_back(std::string("tolerances.") + key + " must be positive");
        };
        read("tol", st.tol);
        read("eps_len", st.eps_len);
        read("eps_geom", st.eps_geom);
        read("spacing", st.spacing);
        read("resolution", st.resolution);
    }

    if (doc.contains("seed")) {
        const json& j = doc["seed"];
        if (!j.is_number_unsigned()) fail("seed", "expected a non-negative integer");
        s.seed = j.get<std::uint64_t>();
    }

    if (!problems.empty()) {
        std::string msg;
        for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
        throw Error(ErrorKind::ValidationError, msg);
    }
    return s;
}

std::string serialize_scene(const Scene& s) {
    json doc;
    doc["window"] = to_json(s.window);
    doc["halfplanes"] = json::array();
    for (const auto& h : s.halfplanes) doc["halfplanes"].push_back({{"coeffs", h.coeffs}, {"theta", h.theta}, {"strict", h.strict}});
    doc["curves"] = json::array();
    for (const auto& c : s.curves)
        doc["curves"].push_back({{"coeffs", c.coeffs}, {"theta", c.theta}, {"kind", to_string(c.kind)}, {"params", c.params}});
    doc["points"] = json::array();
    for (Point p : s.points) doc["points"].push_back(to_json(p));
    const SceneTolerances& t = s.tolerances;
    doc["tolerances"] = {{"tol", t.tol}, {"eps_len", t.eps_len}, {"eps_geom", t.eps_geom}, {"spacing", t.spacing},
                         {"resolution", t.resolution}};
    doc["seed"] = s.seed;
    return doc.dump(2) + "\n";
}

TypeIDecomposition scene_regions(const Scene& s) {
    if (s.halfplanes.empty()) {
        TypeIDecomposition d;
        d.window = s.window;
        return d;
    }
    std::vector<HalfPlane> hs;
    for (const auto& h : s.halfplanes) hs.push_back(h.to_halfplane());
    return intersect_halfplanes(hs, s.window, s.tolerances.tol);
}

namespace {

std::vector<CurvePiece> pieces_of(const Scene& s) {
    std::vector<CurvePiece> out;
    for (const auto& c : s.curves) out.push_back(c.to_piece());
    return out;
}

}  // namespace

CellComplex scene_complex(const Scene& s) {
    return union_cell_decomposition(s.points, pieces_of(s), scene_regions(s).regions, s.window, s.tolerances.tol);
}

Mask scene_mask(const Scene& s) {
    return [points = s.points, curves = pieces_of(s), regions = scene_regions(s).regions, tol = s.tolerances.tol](Point p) {
        return union_contains(points, curves, regions, p, tol);
    };
}

Classification scene_classification(const Scene& s) {
    std::vector<RotatedGraph> curves;
    for (const auto& c : s.curves) curves.push_back({Polynomial(c.coeffs), c.theta});
    std::vector<HalfPlane> opens;
    for (const auto& h : s.halfplanes) opens.push_back({{Polynomial(h.coeffs), h.theta}, true});
    return classify_basic_set(curves, opens, s.window, s.tolerances.tol);
}

}  // namespace semialg
