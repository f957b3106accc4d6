#include "semialg/geodesic.hpp"
#include "semialg/interaction.hpp"
#include "semialg/io.hpp"
#include "semialg/oracle.hpp"
#include "semialg/regions.hpp"
#include "semialg/render.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

using namespace semialg;

namespace {

constexpr double kPi = std::numbers::pi;
const Polynomial kParabola{0, 0, 1};

std::vector<HalfPlane> corner_region() {
    return {{{Polynomial{2, 0, -1}, kPi / 4}, false}, {{Polynomial{1}, -kPi / 2}, false}, {{Polynomial{1}, kPi}, false}};
}

std::vector<HalfPlane> bulge_region() {
    return {{{Polynomial{-0.5, 0, 1}, kPi / 4}, false}, {{Polynomial{1}, -kPi / 2}, false}, {{Polynomial{1}, kPi}, false}};
}

}  // namespace

static void BM_TriangleGap(benchmark::State& state) {
    std::vector<double> q;
    const int n = static_cast<int>(state.range(0));
    for (int i = 0; i <= n; ++i) q.push_back(static_cast<double>(i) / n);
    for (auto _ : state) benchmark::DoNotOptimize(triangle_completion_gap(kParabola, q));
    state.SetComplexityN(n);
}
BENCHMARK(BM_TriangleGap)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

static void BM_ZigzagRefine(benchmark::State& state) {
    for (auto _ : state) {
        ZigzagCurve z = make_zigzag(kParabola, {-1, 1});
        for (int i = 0; i < state.range(0); ++i) z = refine_zigzag(z);
        benchmark::DoNotOptimize(z.length());
    }
}
BENCHMARK(BM_ZigzagRefine)->DenseRange(4, 16, 4);

static void BM_GeodesicBelowGraph(benchmark::State& state) {
    const Polynomial f{0.3, -0.2, 0.5, 0.1};
    for (auto _ : state) benchmark::DoNotOptimize(geodesic_below_graph(f, {-1.5, -1}, {1.2, 0.2}));
}
BENCHMARK(BM_GeodesicBelowGraph);

static void BM_GeodesicInRegion(benchmark::State& state) {
    const TypeIRegion r = intersect_halfplanes(bulge_region(), {-3, 3, -3, 3}).regions.at(0);
    for (auto _ : state) benchmark::DoNotOptimize(geodesic_in_region(r, {-0.5, -0.9}, {1.0, 0.8}));
}
BENCHMARK(BM_GeodesicInRegion)->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state) {
    OracleConfig cfg;
    cfg.window = {-1.1, 1.1, -0.5, 0.6};
    cfg.grid_n = static_cast<int>(state.range(0));
    auto below = [](Point p) { return p.y <= p.x * p.x; };
    for (auto _ : state) benchmark::DoNotOptimize(polygonal_shortest_path(below, {-1, 0.5}, {1, 0.5}, cfg));
}
BENCHMARK(BM_Oracle)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

static void BM_BrickDecomposition(benchmark::State& state) {
    const double spacing = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(brick_decomposition(kParabola, {-1.5, 1.5, -2.5, 1.5}, spacing));
}
BENCHMARK(BM_BrickDecomposition)->RangeMultiplier(2)->Range(1, 16)->Unit(benchmark::kMillisecond);

static void BM_OpenHalfplaneDecomposition(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(open_halfplane_decomposition(kParabola, {-1.5, 1.5, -2.5, 1.5}, 0.5));
}
BENCHMARK(BM_OpenHalfplaneDecomposition)->Unit(benchmark::kMillisecond);

static void BM_IntersectHalfplanes(benchmark::State& state) {
    const std::vector<HalfPlane> hs = corner_region();
    for (auto _ : state) benchmark::DoNotOptimize(intersect_halfplanes(hs, {-3, 3, -3, 3}));
}
BENCHMARK(BM_IntersectHalfplanes)->Unit(benchmark::kMillisecond);

static void BM_UnionDecomposition(benchmark::State& state) {
    const Box w{-3, 3, -3, 3};
    const std::vector<TypeIRegion> regions = intersect_halfplanes(corner_region(), w).regions;
    const std::vector<CurvePiece> curves{{{Polynomial{-2, 0, 0.5}, 0}, {CurveKind::Whole}}};
    for (auto _ : state) benchmark::DoNotOptimize(union_cell_decomposition({{2.5, -2.5}}, curves, regions, w));
}
BENCHMARK(BM_UnionDecomposition)->Unit(benchmark::kMillisecond);

static void BM_CountInteractions(benchmark::State& state) {
    const CellComplex bricks = brick_decomposition(kParabola, {-1.1, 1.1, -0.5, 0.6}, 0.25);
    const PiecewiseCurve c = geodesic_below_graph(kParabola, {-1, 0.5}, {1, 0.5});
    for (auto _ : state) benchmark::DoNotOptimize(count_interactions(c, bricks, 0.01));
}
BENCHMARK(BM_CountInteractions)->Unit(benchmark::kMillisecond);

static void BM_PartitionCheck(benchmark::State& state) {
    const CellComplex c = brick_decomposition(kParabola, {-1.5, 1.5, -2.5, 1.5}, 0.5);
    auto below = [](Point p) { return p.y <= p.x * p.x + 1e-9; };
    for (auto _ : state) benchmark::DoNotOptimize(partition_check(c, below, static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_PartitionCheck)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_ComplexRoundTrip(benchmark::State& state) {
    const CellComplex c = brick_decomposition(kParabola, {-1.5, 1.5, -2.5, 1.5}, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(serialize_complex(parse_complex(serialize_complex(c))));
}
BENCHMARK(BM_ComplexRoundTrip)->Unit(benchmark::kMillisecond);

static void BM_RenderSvg(benchmark::State& state) {
    const CellComplex c = brick_decomposition(kParabola, {-1.1, 1.1, -0.5, 0.6}, 0.25);
    const PiecewiseCurve g = geodesic_below_graph(kParabola, {-1, 0.5}, {1, 0.5});
    for (auto _ : state) benchmark::DoNotOptimize(render_svg(c, {g}));
}
BENCHMARK(BM_RenderSvg)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
