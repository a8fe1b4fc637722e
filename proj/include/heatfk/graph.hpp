#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heatfk/matrix.hpp"

namespace heatfk {

using Vertex = std::size_t;

enum class MeasureKind { counting, normalizing, explicit_measure };

std::string to_string(MeasureKind kind);
MeasureKind measure_kind_from_string(const std::string& name);

struct Edge {
    Vertex u;
    Vertex v;
    double b;
};

struct Neighbor {
    Vertex to;
    double b;
};

// Sorted, duplicate-free list of vertex indices.
class VertexSubset {
public:
    VertexSubset() = default;
    // Throws DomainError unless `sorted` is strictly increasing.
    explicit VertexSubset(std::vector<Vertex> sorted);
    static VertexSubset from_unsorted(std::vector<Vertex> items);
    static VertexSubset all(std::size_t n);

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    Vertex operator[](std::size_t i) const { return items_[i]; }
    bool contains(Vertex x) const;
    // Position of x in the list, or size() when absent.
    std::size_t position(Vertex x) const;
    bool is_subset_of(const VertexSubset& other) const;

    const std::vector<Vertex>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    bool operator==(const VertexSubset& o) const = default;

private:
    std::vector<Vertex> items_;
};

VertexSubset intersect(const VertexSubset& a, const VertexSubset& b);

// Finite weighted graph over a measure space. Adjacency lists are sorted by
// neighbor index. The raw constructor stores exactly what it is given so that
// validate() can report broken inputs; make_graph() is the checked builder.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(std::vector<std::string> ids,
                  std::vector<std::vector<Neighbor>> adjacency,
                  std::vector<double> m,
                  MeasureKind kind);

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(Vertex x) const { return ids_.at(x); }
    std::optional<Vertex> find(const std::string& id) const;

    std::span<const Neighbor> neighbors(Vertex x) const { return adjacency_.at(x); }
    double b(Vertex x, Vertex y) const;
    double m(Vertex x) const { return m_.at(x); }
    const std::vector<double>& measure() const { return m_; }
    double deg(Vertex x) const { return deg_.at(x); }
    double Deg(Vertex x) const { return deg_.at(x) / m_.at(x); }
    MeasureKind measure_kind() const { return kind_; }

    // Each unordered pair once, u < v, ordered by (u, v).
    std::vector<Edge> edges() const;
    std::size_t arc_count() const;
    double total_measure() const;
    double max_Deg() const;
    bool connected() const;
    // Hop distances from x (SIZE_MAX when unreachable).
    std::vector<std::size_t> hop_distances(Vertex x) const;

    bool operator==(const WeightedGraph& o) const;

private:
    std::vector<std::string> ids_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<double> m_;
    std::vector<double> deg_;
    MeasureKind kind_ = MeasureKind::counting;
};

// Checked builder: symmetrizes the edge list and derives m from `kind`
// (counting: m = 1, normalizing: m = deg, explicit: `m` as given).
WeightedGraph make_graph(std::vector<std::string> ids, const std::vector<Edge>& edges,
                         MeasureKind kind, std::vector<double> m = {});

double vertex_degree(const WeightedGraph& g, Vertex x);
std::vector<double> apply_laplacian(const WeightedGraph& g, std::span<const double> f);
// ½ Σ_{x,y} b(x,y)(f(x)−f(y))², each unordered pair counted once.
double dirichlet_energy(const WeightedGraph& g, std::span<const double> f);
// M_U^{-1/2}(D_U − B_U)M_U^{-1/2} where D_U carries the full degrees.
Matrix dirichlet_form_matrix(const WeightedGraph& g, const VertexSubset& U);
std::vector<std::string> validate(const WeightedGraph& g);

} // namespace heatfk
