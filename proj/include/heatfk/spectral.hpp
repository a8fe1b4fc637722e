#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "heatfk/eigen.hpp"
#include "heatfk/graph.hpp"
#include "heatfk/kernels.hpp"
#include "heatfk/metric.hpp"

namespace heatfk {

double dirichlet_lambda(const WeightedGraph& g, const VertexSubset& U);

// Full mode: Λ of the finite graph itself (0 when connected).
// Dirichlet-host mode: the graph is killed outside H and Λ = λ(H).
struct SpectralMode {
    bool dirichlet = false;
    VertexSubset host;

    static SpectralMode full() { return {}; }
    static SpectralMode dirichlet_host(VertexSubset H) { return {true, std::move(H)}; }
};

double spectral_bottom(const WeightedGraph& g, const SpectralMode& mode);

enum class FkMode { exact, heuristic };

std::string to_string(FkMode mode);

struct FKEstimate {
    double a = 0.0;
    double n = 1.0;
    double r = 0.0;
    Vertex center = 0;
    VertexSubset ball;        // ground set searched (B_x(r), intersected with the host if any)
    double ball_measure = 0;  // m(B_x(r)) of the full ball
    VertexSubset witness;
    double lambda_witness = 0.0;
    FkMode mode = FkMode::exact;
    std::size_t examined = 0;
};

struct FkOptions {
    std::size_t cap = 16;
    Exec exec = Exec::parallel;
    // When set, subsets are restricted to B_x(r) ∩ host (Dirichlet-host mode).
    std::optional<VertexSubset> host;
};

// a = inf_{∅≠U⊆B} λ(U)·r²·(m(U)/m(B_x(r)))^{2/n} by full enumeration.
FKEstimate fk_constant_exact(const WeightedGraph& g, const IntrinsicMetric& metric, Vertex x, double r, double n,
                             const FkOptions& opt = {});

// Same infimum over superlevel sets of the ground state of B plus greedy
// single-vertex toggles until no toggle improves.
FKEstimate fk_constant_heuristic(const WeightedGraph& g, const IntrinsicMetric& metric, Vertex x, double r,
                                 double n, const FkOptions& opt = {});

struct FkRow {
    Vertex x;
    double r;
    FKEstimate estimate;
    bool certified;  // exact row
};

// Rows for every center and every grid radius in [R1, R2]. With an empty
// grid the radii are R1, R2 and the ball breakpoints in between.
std::vector<FkRow> fk_profile(const WeightedGraph& g, const IntrinsicMetric& metric, const std::vector<Vertex>& centers,
                              double R1, double R2, const std::function<double(double)>& n_of_r,
                              std::vector<double> r_grid = {}, const FkOptions& opt = {});

// Absolute form used by the mean value inequality:
// inf_{∅≠U⊆B} λ(U)·m(U)^{2/n}, so that λ(U) ≥ a·m(U)^{-2/n} on B.
struct AbsoluteFk {
    double a = 0.0;
    VertexSubset witness;
    bool certified = false;
};

AbsoluteFk absolute_fk_exact(const WeightedGraph& g, const VertexSubset& ground, double n, const FkOptions& opt = {});

// Certified lower bound for balls beyond the enumeration cap, from domain
// monotonicity: λ(U) ≥ λ(B) and m(U) ≥ min m on B.
double fk_monotone_lower_bound(const WeightedGraph& g, const VertexSubset& B, double ball_measure, double r, double n);

} // namespace heatfk
