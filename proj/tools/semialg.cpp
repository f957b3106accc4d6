#include "semialg/errors.hpp"
#include "semialg/interaction.hpp"
#include "semialg/io.hpp"
#include "semialg/oracle.hpp"
#include "semialg/render.hpp"
#include "semialg/scene.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace semialg;
using json = nlohmann::json;

namespace {

struct Options {
    std::string command;
    std::string scene_path;
    std::optional<double> tol;
    int grid = 256;
    std::optional<std::uint64_t> seed;
    std::string svg;
    std::string from, to;
};

constexpr int kValidationExit = 2;
constexpr int kComputeExit = 3;

int report_error(ErrorKind kind, const std::string& message) {
    json e = {{"error", to_string(kind)}, {"message", message}};
    std::cerr << e.dump() << "\n";
    return kind == ErrorKind::ParseError || kind == ErrorKind::ValidationError ? kValidationExit : kComputeExit;
}

Point parse_point(const std::string& text, const char* flag) {
    std::istringstream is(text);
    double x = 0.0, y = 0.0;
    char comma = 0;
    const bool ok = (is >> x >> comma >> y) && comma == ',' && (is >> std::ws).eof();
    if (!ok)
        throw Error(ErrorKind::ValidationError, std::string(flag) + " expects X,Y");
    if (!std::isfinite(x) || !std::isfinite(y)) throw Error(ErrorKind::ValidationError, std::string(flag) + " is not finite");
    return {x, y};
}

Scene load_scene(const Options& o) {
    std::ifstream in(o.scene_path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ValidationError, "cannot read " + o.scene_path);
    std::stringstream buf;
    buf << in.rdbuf();
    Scene s = parse_scene(buf.str());
    for (const auto& w : s.warnings) std::cerr << json{{"warning", w}}.dump() << "\n";
    if (o.tol) {
        if (!(*o.tol > 0.0)) throw Error(ErrorKind::ValidationError, "--tol must be positive");
        s.tolerances.tol = *o.tol;
    }
    if (o.seed) s.seed = *o.seed;
    return s;
}

bool below_graph_scene(const Scene& s) {
    return s.halfplanes.size() == 1 && s.halfplanes[0].theta == 0.0 && !s.halfplanes[0].strict;
}

struct GeodesicRun {
    PiecewiseCurve curve;
    Mask mask;
    bool below_graph = false;
};

GeodesicRun run_geodesic(const Scene& s, Point a, Point b) {
    Tolerances tol;
    tol.eps_len = s.tolerances.eps_len;
    tol.eps_geom = s.tolerances.eps_geom;
    GeodesicRun out;
    if (below_graph_scene(s)) {
        const Polynomial f(s.halfplanes[0].coeffs);
        out.curve = geodesic_below_graph(f, a, b, tol);
        out.mask = [f](Point p) { return p.y <= f(p.x); };
        out.below_graph = true;
        return out;
    }
    const TypeIDecomposition d = scene_regions(s);
    const double t = s.tolerances.tol;
    int ra = -1, rb = -1;
    for (std::size_t i = 0; i < d.regions.size(); ++i) {
        if (ra < 0 && d.regions[i].contains(a, 10 * t)) ra = static_cast<int>(i);
        if (rb < 0 && d.regions[i].contains(b, 10 * t)) rb = static_cast<int>(i);
    }
    if (ra < 0 || rb < 0) throw Error(ErrorKind::OutsideRegion, "endpoint outside every region of the scene");
    if (d.regions[ra].contains(b, 10 * t)) rb = ra;
    if (ra != rb) throw Error(ErrorKind::Disconnected, "endpoints lie in different regions");
    const TypeIRegion region = d.regions[ra];
    out.curve = geodesic_in_region(region, a, b, tol);
    out.mask = [region, t](Point p) { return region.contains(p, 10 * t); };
    return out;
}

json suite(const std::string& name, bool pass, const std::string& detail) {
    return {{"name", name}, {"pass", pass}, {"detail", detail}};
}

std::string first_witnesses(const std::vector<std::string>& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size() && i < 3; ++i) out += (i ? "; " : "") + w[i];
    return out;
}

int verify(const Scene& s, const Options& o) {
    json suites = json::array();

    const TypeIDecomposition d = scene_regions(s);
    const ValidationReport v = validate_decomposition(d);
    std::string vd;
    for (const auto& p : v.property)
        if (!p.pass) vd += first_witnesses(p.witnesses);
    suites.push_back(suite("region properties", v.ok(), vd));

    const CellComplex c = scene_complex(s);
    const PartitionReport pr = partition_check(c, scene_mask(s), 10000, s.seed);
    suites.push_back(suite("partition", pr.ok(),
                           std::to_string(pr.violations) + " violations in " + std::to_string(pr.samples) + " samples"));
    const PartitionReport cl = closure_check(c);
    suites.push_back(suite("closure", cl.ok(), std::to_string(cl.violations) + " violations"));

    try {
        const Classification k = scene_classification(s);
        suites.push_back(suite("classification", true, to_string(k.tag)));
    } catch (const Error& e) {
        suites.push_back(suite("classification", false, e.what()));
    }

    const std::string cj = serialize_complex(c);
    const std::string sj = serialize_scene(s);
    suites.push_back(suite("round trip", serialize_complex(parse_complex(cj)) == cj && serialize_scene(parse_scene(sj)) == sj, ""));

    if (!o.from.empty() && !o.to.empty()) {
        const Point a = parse_point(o.from, "--from"), b = parse_point(o.to, "--to");
        const GeodesicRun g = run_geodesic(s, a, b);
        const StructureReport st = geodesic_structure(g.curve);
        suites.push_back(suite("geodesic structure", st.ok(),
                               "tangency residual " + [&] { std::ostringstream t; t << st.tangency_residual; return t.str(); }()));
        OracleConfig cfg;
        cfg.window = s.window;
        cfg.grid_n = o.grid;
        const OraclePath op = polygonal_shortest_path(g.mask, a, b, cfg);
        const double len = g.curve.length();
        std::ostringstream os;
        os.precision(10);
        os << "geodesic " << len << ", oracle " << op.length << ", bound " << op.resolution_bound;
        suites.push_back(suite("oracle", len <= op.length + 1e-9 && len >= op.length - op.resolution_bound, os.str()));
        if (g.below_graph) {
            const CellComplex bricks = brick_decomposition(Polynomial(s.halfplanes[0].coeffs), s.window,
                                                           s.tolerances.spacing, s.tolerances.tol);
            const InteractionReport ir = count_interactions(g.curve, bricks, 0.01);
            const BoundsCheck bc = check_bounds(ir, bricks, 1, 2);
            suites.push_back(suite("interaction bounds", bc.pass, first_witnesses(bc.witnesses)));
        }
    }

    bool all = true;
    for (const auto& x : suites) all = all && x["pass"].get<bool>();
    std::cout << json{{"pass", all}, {"suites", suites}}.dump(2) << "\n";
    return all ? 0 : 1;
}

int run(const Options& o) {
    const Scene s = load_scene(o);
    if (o.command == "decompose") {
        std::cout << serialize_complex(scene_complex(s));
        return 0;
    }
    if (o.command == "classify") {
        std::cout << serialize_classification(scene_classification(s));
        return 0;
    }
    if (o.command == "geodesic") {
        if (o.from.empty() || o.to.empty()) throw Error(ErrorKind::ValidationError, "geodesic needs --from and --to");
        std::cout << serialize_curve(run_geodesic(s, parse_point(o.from, "--from"), parse_point(o.to, "--to")).curve);
        return 0;
    }
    if (o.command == "verify") return verify(s, o);
    // render
    if (o.svg.empty()) throw Error(ErrorKind::ValidationError, "render needs --svg PATH");
    std::vector<PiecewiseCurve> curves;
    if (!o.from.empty() && !o.to.empty())
        curves.push_back(run_geodesic(s, parse_point(o.from, "--from"), parse_point(o.to, "--to")).curve);
    const std::string svg = render_svg(scene_complex(s), curves);
    std::ofstream out(o.svg, std::ios::binary);
    if (!(out << svg)) throw Error(ErrorKind::ValidationError, "cannot write " + o.svg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cell decompositions, geodesics and interaction checks for planar semi-algebraic sets"};
    Options o;
    app.add_option("command", o.command, "decompose | classify | geodesic | verify | render")
        ->required()
        ->check(CLI::IsMember({"decompose", "classify", "geodesic", "verify", "render"}));
    app.add_option("scene", o.scene_path, "scene JSON file")->required();
    app.add_option("--tol", o.tol, "geometric tolerance, overrides the scene");
    app.add_option("--grid", o.grid, "oracle grid resolution for verify")->check(CLI::Range(4, 1 << 14));
    app.add_option("--seed", o.seed, "seed for sampled checks, overrides the scene");
    app.add_option("--svg", o.svg, "output path for render");
    app.add_option("--from", o.from, "geodesic start X,Y");
    app.add_option("--to", o.to, "geodesic end X,Y");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidationExit;
    }
    try {
        return run(o);
    } catch (const Error& e) {
        return report_error(e.kind(), e.what());
    } catch (const std::exception& e) {
        return report_error(ErrorKind::ValidationError, e.what());
    }
}
