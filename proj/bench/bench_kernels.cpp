// Serial reference versus OpenMP for the three hot loops.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "heatfk/families.hpp"
#include "heatfk/graph.hpp"
#include "heatfk/kernels.hpp"
#include "heatfk/metric.hpp"

using namespace heatfk;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_ShortestPaths(benchmark::State& state) {
    const WeightedGraph g = generate(box_spec(2, static_cast<int>(state.range(1)), MeasureKind::counting));
    const IntrinsicMetric metric = IntrinsicMetric::build(g, MetricRule::degree_path, Exec::serial);
    std::vector<std::vector<double>> arc(g.size());
    for (Vertex x = 0; x < g.size(); ++x)
        for (std::size_t k = 0; k < g.neighbors(x).size(); ++k) arc[x].push_back(metric.arc_length(x, k));
    for (auto _ : state) benchmark::DoNotOptimize(shortest_path_table(g, arc, exec_of(state)));
    label(state);
}

void BM_HeatMatrix(benchmark::State& state) {
    const WeightedGraph g = generate(path_spec(static_cast<int>(state.range(1)), MeasureKind::counting));
    const KilledGenerator gen(g, VertexSubset::all(g.size()));
    for (auto _ : state) benchmark::DoNotOptimize(gen.matrix(4.0, exec_of(state)));
    label(state);
}

void BM_FkEnumeration(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(1));
    const WeightedGraph g = generate(complete_spec(static_cast<int>(k) + 1, MeasureKind::counting));
    std::vector<Vertex> items;
    for (Vertex v = 0; v < k; ++v) items.push_back(v);
    const VertexSubset ground(items);
    const Matrix A = dirichlet_form_matrix(g, ground);
    std::vector<double> w(k, 1.0);
    std::vector<std::uint32_t> adj(k);
    for (std::size_t i = 0; i < k; ++i) adj[i] = ((std::uint32_t(1) << k) - 1) & ~(std::uint32_t(1) << i);
    for (auto _ : state) benchmark::DoNotOptimize(min_subset_objective(A, w, adj, 1.0, exec_of(state)));
    label(state);
}

} // namespace

BENCHMARK(BM_ShortestPaths)->ArgsProduct({{0, 1}, {16, 32}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeatMatrix)->ArgsProduct({{0, 1}, {64, 200}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FkEnumeration)->ArgsProduct({{0, 1}, {10, 14}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
