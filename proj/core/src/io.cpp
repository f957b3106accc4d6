#include "semialg/io.hpp"

#include "json_util.hpp"

namespace semialg {

using namespace jsonio;

std::string serialize_complex(const CellComplex& c) {
    const Arrangement& arr = c.arrangement();
    json doc;
    doc["window"] = to_json(arr.window());
    doc["tol"] = arr.tol();
    doc["vertices"] = json::array();
    for (const auto& v : arr.vertices()) doc["vertices"].push_back(to_json(v.p));
    doc["edges"] = json::array();
    for (const auto& e : arr.edges()) {
        doc["edges"].push_back({{"graph", to_json(e.geom.graph())},
                                {"interval", {e.geom.param().lo, e.geom.param().hi}},
                                {"v0", e.v0},
                                {"v1", e.v1},
                                {"tags", e.tags},
                                {"synthetic", e.synthetic}});
    }
    doc["faces"] = json::array();
    for (const auto& f : arr.faces()) {
        json cycles = json::array();
        for (const auto& cyc : f.cycles) {
            json sides = json::array();
            for (const auto& s : cyc) sides.push_back({s.edge, s.forward});
            cycles.push_back(std::move(sides));
        }
        doc["faces"].push_back({{"cycles", std::move(cycles)}, {"interior", to_json(f.interior)}});
    }
    const char* names[3] = {"vertices", "edges", "faces"};
    const std::size_t counts[3] = {arr.vertices().size(), arr.edges().size(), arr.faces().size()};
    doc["member"] = json::object();
    for (int d = 0; d < 3; ++d) {
        json m = json::array();
        for (std::size_t i = 0; i < counts[d]; ++i)
            if (c.member(d, static_cast<int>(i))) m.push_back(i);
        doc["member"][names[d]] = std::move(m);
    }
    doc["clipped_vertices"] = json::array();
    for (std::size_t i = 0; i < counts[0]; ++i)
        if (c.clipped(0, static_cast<int>(i))) doc["clipped_vertices"].push_back(i);
    return doc.dump(2) + "\n";
}

namespace {

std::vector<char> member_flags(const json& j, const std::string& path, std::size_t n) {
    std::vector<char> out(n, 0);
    for (std::size_t i = 0; i < array(j, path).size(); ++i) {
        const long long k = integer(j[i], index(path, i));
        if (k < 0 || static_cast<std::size_t>(k) >= n) fail(index(path, i), "index out of range");
        out[static_cast<std::size_t>(k)] = 1;
    }
    return out;
}

}  // namespace

CellComplex parse_complex(std::string_view text) {
    const json doc = parse_document(text);
    object(doc, "", {"window", "tol", "vertices", "edges", "faces", "member", "clipped_vertices"});
    for (const char* k : {"window", "tol", "vertices", "edges", "faces", "member"})
        if (!doc.contains(k)) fail(k, "missing");
    const Box window = box(doc["window"], "window");
    const double tol = number(doc["tol"], "tol");

    std::vector<Arrangement::Vertex> vertices;
    const json& vs = array(doc["vertices"], "vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back({point(vs[i], index("vertices", i))});

    auto vertex_index = [&](const json& j, const std::string& path) {
        const long long k = integer(j, path);
        if (k < 0 || static_cast<std::size_t>(k) >= vertices.size()) fail(path, "vertex index out of range");
        return static_cast<int>(k);
    };

    std::vector<Arrangement::ArcEdge> edges;
    const json& es = array(doc["edges"], "edges");
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string path = index("edges", i);
        object(es[i], path, {"graph", "interval", "v0", "v1", "tags", "synthetic"});
        for (const char* k : {"graph", "interval", "v0", "v1"})
            if (!es[i].contains(k)) fail(join(path, k), "missing");
        Arrangement::ArcEdge e;
        const RotatedGraph g = graph(es[i]["graph"], join(path, "graph"));
        const std::vector<double> iv = numbers(es[i]["interval"], join(path, "interval"));
        if (iv.size() != 2 || !(iv[0] < iv[1])) fail(join(path, "interval"), "expected [lo, hi] with lo < hi");
        e.geom = Edge(g, {iv[0], iv[1]});
        e.v0 = vertex_index(es[i]["v0"], join(path, "v0"));
        e.v1 = vertex_index(es[i]["v1"], join(path, "v1"));
        if (es[i].contains("tags")) {
            const json& ts = array(es[i]["tags"], join(path, "tags"));
            for (std::size_t k = 0; k < ts.size(); ++k)
                e.tags.push_back(static_cast<int>(integer(ts[k], index(join(path, "tags"), k))));
        }
        if (es[i].contains("synthetic")) e.synthetic = boolean(es[i]["synthetic"], join(path, "synthetic"));
        edges.push_back(std::move(e));
    }

    std::vector<Arrangement::Face> faces;
    const json& fs = array(doc["faces"], "faces");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const std::string path = index("faces", i);
        object(fs[i], path, {"cycles", "interior"});
        if (!fs[i].contains("cycles") || !fs[i].contains("interior")) fail(path, "needs cycles and interior");
        Arrangement::Face f;
        const json& cycles = array(fs[i]["cycles"], join(path, "cycles"));
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            const std::string cpath = index(join(path, "cycles"), c);
            std::vector<Arrangement::Side> cyc;
            for (std::size_t s = 0; s < array(cycles[c], cpath).size(); ++s) {
                const std::string spath = index(cpath, s);
                const json& side = array(cycles[c][s], spath);
                if (side.size() != 2) fail(spath, "expected [edge, forward]");
                const long long e = integer(side[0], spath);
                if (e < 0 || static_cast<std::size_t>(e) >= edges.size()) fail(spath, "edge index out of range");
                cyc.push_back({static_cast<int>(e), boolean(side[1], spath)});
            }
            f.cycles.push_back(std::move(cyc));
        }
        f.interior = point(fs[i]["interior"], join(path, "interior"));
        faces.push_back(std::move(f));
    }

    const json& m = object(doc["member"], "member", {"vertices", "edges", "faces"});
    for (const char* k : {"vertices", "edges", "faces"})
        if (!m.contains(k)) fail(join("member", k), "missing");
    std::vector<char> vm = member_flags(m["vertices"], "member.vertices", vertices.size());
    std::vector<char> em = member_flags(m["edges"], "member.edges", edges.size());
    std::vector<char> fm = member_flags(m["faces"], "member.faces", faces.size());
    const std::size_t nv = vertices.size();

    CellComplex c(Arrangement::from_parts(window, tol, std::move(vertices), std::move(edges), std::move(faces)),
                  std::move(vm), std::move(em), std::move(fm));
    if (doc.contains("clipped_vertices")) {
        const std::vector<char> cv = member_flags(doc["clipped_vertices"], "clipped_vertices", nv);
        for (std::size_t i = 0; i < nv; ++i)
            if (cv[i]) c.mark_clipped_vertex(static_cast<int>(i));
    }
    return c;
}

std::string serialize_curve(const PiecewiseCurve& c) {
    json doc;
    doc["pieces"] = json::array();
    for (const auto& p : c.pieces) {
        if (p.is_arc())
            doc["pieces"].push_back({{"kind", "arc"}, {"graph", to_json(p.graph)}, {"from", p.from}, {"to", p.to}});
        else
            doc["pieces"].push_back({{"kind", "segment"}, {"p", to_json(p.p)}, {"q", to_json(p.q)}});
    }
    doc["length"] = c.empty() ? 0.0 : c.length();
    return doc.dump(2) + "\n";
}

PiecewiseCurve parse_curve(std::string_view text) {
    const json doc = parse_document(text);
    object(doc, "", {"pieces", "length"});
    if (!doc.contains("pieces")) fail("pieces", "missing");
    if (doc.contains("length")) number(doc["length"], "length");
    PiecewiseCurve c;
    const json& ps = array(doc["pieces"], "pieces");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const std::string path = index("pieces", i);
        if (!ps[i].is_object() || !ps[i].contains("kind")) fail(path, "expected an object with a kind");
        const std::string& kind = string(ps[i]["kind"], join(path, "kind"));
        if (kind == "segment") {
            object(ps[i], path, {"kind", "p", "q"});
            if (!ps[i].contains("p") || !ps[i].contains("q")) fail(path, "needs p and q");
            c.pieces.push_back(PathPiece::segment(point(ps[i]["p"], join(path, "p")), point(ps[i]["q"], join(path, "q"))));
        } else if (kind == "arc") {
            object(ps[i], path, {"kind", "graph", "from", "to"});
            if (!ps[i].contains("graph") || !ps[i].contains("from") || !ps[i].contains("to"))
                fail(path, "needs graph, from and to");
            c.pieces.push_back(PathPiece::arc(graph(ps[i]["graph"], join(path, "graph")),
                                              number(ps[i]["from"], join(path, "from")),
                                              number(ps[i]["to"], join(path, "to"))));
        } else {
            fail(join(path, "kind"), "expected segment or arc");
        }
    }
    return c;
}

std::string serialize_classification(const Classification& c) {
    json doc;
    doc["tag"] = to_string(c.tag);
    doc["points"] = json::array();
    for (Point p : c.points) doc["points"].push_back(to_json(p));
    doc["curves"] = json::array();
    for (const auto& piece : c.curves) {
        json span = {{"kind", to_string(piece.span.kind)}};
        if (piece.span.kind != CurveKind::Whole) span["x0"] = piece.span.x0;
        if (piece.span.kind == CurveKind::Bounded) span["x1"] = piece.span.x1;
        if (piece.span.kind == CurveKind::HalfOpen) span["direction"] = piece.span.direction;
        doc["curves"].push_back({{"graph", to_json(piece.graph)}, {"span", std::move(span)}});
    }
    doc["regions"] = json::array();
    for (const auto& r : c.regions.regions) {
        json vs = json::array();
        for (Point p : r.vertices) vs.push_back(to_json(p));
        doc["regions"].push_back({{"closed", r.closed}, {"vertices", std::move(vs)}, {"area", r.area()}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace semialg
