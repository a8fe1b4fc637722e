#pragma once

// Hot loops with a serial reference and an OpenMP version. Both produce
// bit-identical results; the serial path exists for testing and benchmarks.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "heatfk/graph.hpp"
#include "heatfk/matrix.hpp"

namespace heatfk {

enum class Exec { serial, parallel };

// Dijkstra from every source over arc lengths aligned with g's adjacency.
Matrix shortest_path_table(const WeightedGraph& g, const std::vector<std::vector<double>>& arc_len, Exec exec);

// Generator of the heat equation on a host set H with zero values outside H.
// Rates are b(x,y)/m(x); Deg_x keeps the edges that leave H, so mass is killed
// there. With H = X this is the ordinary Laplacian.
class KilledGenerator {
public:
    KilledGenerator(const WeightedGraph& g, const VertexSubset& host);

    std::size_t size() const { return host_.size(); }
    const VertexSubset& host() const { return host_; }
    double rate_bound() const { return q_; }

    // (e^{-tΔ_H} 1_y)(x) for every local x, y = local index. Computed by the
    // uniformized Poisson series Σ_k Pois(k; qt) P^k 1_y with P = I − Δ_H/q.
    // All terms are nonnegative, so each entry carries relative rounding
    // error only, including entries far below the largest one.
    std::vector<double> column(double t, std::size_t y) const;

    // Columns for all y; entry (x, y) = (e^{-tΔ_H} 1_y)(x).
    Matrix matrix(double t, Exec exec) const;

    // e^{-tΔ_H} f for f ≥ 0 on the host.
    std::vector<double> apply(double t, const std::vector<double>& f) const;

private:
    std::vector<double> series(double t, std::vector<double> v, std::size_t min_terms,
                               const std::vector<char>& reachable) const;

    VertexSubset host_;
    std::vector<std::vector<std::pair<std::size_t, double>>> rates_;
    std::vector<double> stay_;     // 1 − Deg_x/q
    std::vector<std::vector<std::size_t>> hops_;  // hop distances inside H
    double q_ = 0.0;
};

struct SubsetSearchResult {
    std::uint32_t mask = 0;      // bit i = i-th vertex of the ground set
    double lambda = 0.0;         // λ(U) of the minimizer
    double objective = 0.0;      // λ(U)·w(U)^{2/n}
    std::size_t examined = 0;    // connected subsets evaluated
};

// Minimizes λ(U)·w(U)^{two_over_n} over nonempty connected U inside a ground
// set of at most 31 vertices. `A` is the Dirichlet form matrix of the ground
// set, `w` the vertex measures, `adj` the neighbor masks inside the ground
// set. Disconnected U are skipped: their value strictly exceeds that of their
// best component. Candidates run by cardinality then lexicographic order and
// ties keep the earliest one.
SubsetSearchResult min_subset_objective(const Matrix& A, const std::vector<double>& w,
                                        const std::vector<std::uint32_t>& adj, double two_over_n, Exec exec);

// Subsets of {0..k-1} as bit masks ordered by cardinality, then
// lexicographically by sorted element list.
std::vector<std::uint32_t> ordered_masks(std::size_t k);

bool mask_connected(std::uint32_t mask, const std::vector<std::uint32_t>& adj);

} // namespace heatfk
