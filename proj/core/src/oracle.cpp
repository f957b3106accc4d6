#include "semialg/oracle.hpp"

#include "semialg/errors.hpp"
#include "semialg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

namespace semialg {

double oracle_resolution_bound(const OracleConfig& cfg) { return 4.0 * cfg.window.diameter() / cfg.grid_n; }

OraclePath polygonal_shortest_path(const Membership& inside, Point a, Point b, const OracleConfig& cfg) {
    if (cfg.grid_n < 2 || cfg.neighbor_radius < 1) throw Error(ErrorKind::ValidationError, "bad oracle configuration");
    const Box& w = cfg.window;
    const int n = cfg.grid_n;
    const int side = n + 1;
    const double dx = w.width() / n;
    const double dy = w.height() / n;
    const int r = cfg.neighbor_radius;

    // Node ids: grid nodes first, then a and b.
    const int id_a = side * side;
    const int id_b = id_a + 1;
    auto pos = [&](int id) -> Point {
        if (id == id_a) return a;
        if (id == id_b) return b;
        return {w.xmin + (id % side) * dx, w.ymin + (id / side) * dy};
    };

    std::vector<signed char> node_in(side * side, -1);
    auto node_ok = [&](int id) {
        if (id >= id_a) return true;
        if (node_in[id] < 0) node_in[id] = inside(pos(id)) ? 1 : 0;
        return node_in[id] == 1;
    };
    auto hop_ok = [&](Point p, Point q) {
        for (int k = 1; k <= cfg.checkpoints; ++k)
            if (!inside(p + (static_cast<double>(k) / (cfg.checkpoints + 1)) * (q - p))) return false;
        return true;
    };

    std::vector<std::pair<int, int>> offsets;
    for (int i = -r; i <= r; ++i)
        for (int j = -r; j <= r; ++j)
            if ((i != 0 || j != 0) && std::gcd(std::abs(i), std::abs(j)) == 1) offsets.push_back({i, j});

    // Grid nodes within the hop radius of an exact endpoint.
    auto near_nodes = [&](Point p) {
        std::vector<int> out;
        const int ci = static_cast<int>(std::floor((p.x - w.xmin) / dx));
        const int cj = static_cast<int>(std::floor((p.y - w.ymin) / dy));
        for (int i = ci - r; i <= ci + r + 1; ++i)
            for (int j = cj - r; j <= cj + r + 1; ++j)
                if (i >= 0 && j >= 0 && i < side && j < side) out.push_back(j * side + i);
        return out;
    };
    const std::vector<int> near_b = near_nodes(b);
    std::vector<char> links_b(side * side, 0);
    for (int id : near_b) links_b[id] = 1;

    const int total = id_b + 1;
    std::vector<double> dist(total, std::numeric_limits<double>::infinity());
    std::vector<int> prev(total, -1);
    std::vector<char> done(total, 0);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
    dist[id_a] = 0.0;
    open.push({distance(a, b), id_a});

    auto relax = [&](int u, int v) {
        if (done[v] || !node_ok(v)) return;
        const Point pu = pos(u);
        const Point pv = pos(v);
        const double nd = dist[u] + distance(pu, pv);
        if (nd >= dist[v]) return;
        if (!hop_ok(pu, pv)) return;
        dist[v] = nd;
        prev[v] = u;
        open.push({nd + distance(pv, b), v});
    };

    while (!open.empty()) {
        const int u = open.top().second;
        open.pop();
        if (done[u]) continue;
        done[u] = 1;
        if (u == id_b) break;
        if (u == id_a) {
            relax(u, id_b);
            for (int v : near_nodes(a)) relax(u, v);
            continue;
        }
        const int i = u % side;
        const int j = u / side;
        for (auto [oi, oj] : offsets) {
            const int ni = i + oi;
            const int nj = j + oj;
            if (ni < 0 || nj < 0 || ni >= side || nj >= side) continue;
            relax(u, nj * side + ni);
        }
        if (links_b[u]) relax(u, id_b);
    }
    if (!done[id_b]) throw Error(ErrorKind::Unreachable, "no grid path between the endpoints");

    OraclePath out;
    for (int u = id_b; u >= 0; u = prev[u]) out.vertices.push_back(pos(u));
    std::reverse(out.vertices.begin(), out.vertices.end());
    out.length = dist[id_b];
    out.resolution_bound = oracle_resolution_bound(cfg);
    return out;
}

double arc_length_quadrature(const Polynomial& f, Interval interval, double tol) {
    const Polynomial d = f.derivative();
    return adaptive_simpson([&](double x) { return std::sqrt(1.0 + d(x) * d(x)); }, interval.lo, interval.hi, tol);
}

}  // namespace semialg
