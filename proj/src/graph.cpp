#include "heatfk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "heatfk/error.hpp"

namespace heatfk {

std::string to_string(MeasureKind kind) {
    switch (kind) {
    case MeasureKind::counting: return "counting";
    case MeasureKind::normalizing: return "normalizing";
    case MeasureKind::explicit_measure: return "explicit";
    }
    return "counting";
}

MeasureKind measure_kind_from_string(const std::string& name) {
    if (name == "counting") return MeasureKind::counting;
    if (name == "normalizing") return MeasureKind::normalizing;
    if (name == "explicit") return MeasureKind::explicit_measure;
    throw DomainError("unknown measure kind '" + name + "'");
}

VertexSubset::VertexSubset(std::vector<Vertex> sorted) : items_(std::move(sorted)) {
    for (std::size_t i = 1; i < items_.size(); ++i) {
        if (items_[i] <= items_[i - 1])
            throw DomainError("vertex subset must be strictly increasing");
    }
}

VertexSubset VertexSubset::from_unsorted(std::vector<Vertex> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return VertexSubset(std::move(items));
}

VertexSubset VertexSubset::all(std::size_t n) {
    std::vector<Vertex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return VertexSubset(std::move(v));
}

bool VertexSubset::contains(Vertex x) const {
    return std::binary_search(items_.begin(), items_.end(), x);
}

std::size_t VertexSubset::position(Vertex x) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it == items_.end() || *it != x) return items_.size();
    return static_cast<std::size_t>(it - items_.begin());
}

bool VertexSubset::is_subset_of(const VertexSubset& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

VertexSubset intersect(const VertexSubset& a, const VertexSubset& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSubset(std::move(out));
}

WeightedGraph::WeightedGraph(std::vector<std::string> ids,
                             std::vector<std::vector<Neighbor>> adjacency,
                             std::vector<double> m,
                             MeasureKind kind)
    : ids_(std::move(ids)), adjacency_(std::move(adjacency)), m_(std::move(m)), kind_(kind) {
    if (adjacency_.size() != ids_.size() || m_.size() != ids_.size())
        throw DomainError("graph arrays have inconsistent lengths");
    deg_.assign(ids_.size(), 0.0);
    for (std::size_t x = 0; x < ids_.size(); ++x) {
        auto& nb = adjacency_[x];
        std::sort(nb.begin(), nb.end(), [](const Neighbor& a, const Neighbor& c) { return a.to < c.to; });
        double s = 0.0;
        for (const auto& e : nb) {
            if (e.to >= ids_.size()) throw DomainError("neighbor index out of range");
            s += e.b;
        }
        deg_[x] = s;
    }
}

std::optional<Vertex> WeightedGraph::find(const std::string& id) const {
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (ids_[i] == id) return i;
    return std::nullopt;
}

double WeightedGraph::b(Vertex x, Vertex y) const {
    const auto& nb = adjacency_.at(x);
    auto it = std::lower_bound(nb.begin(), nb.end(), y,
                               [](const Neighbor& e, Vertex v) { return e.to < v; });
    if (it == nb.end() || it->to != y) return 0.0;
    return it->b;
}

std::vector<Edge> WeightedGraph::edges() const {
    std::vector<Edge> out;
    for (Vertex x = 0; x < size(); ++x)
        for (const auto& e : adjacency_[x])
            if (x < e.to) out.push_back({x, e.to, e.b});
    return out;
}

std::size_t WeightedGraph::arc_count() const {
    std::size_t c = 0;
    for (const auto& nb : adjacency_) c += nb.size();
    return c;
}

double WeightedGraph::total_measure() const {
    double s = 0.0;
    for (double v : m_) s += v;
    return s;
}

double WeightedGraph::max_Deg() const {
    double best = 0.0;
    for (Vertex x = 0; x < size(); ++x) best = std::max(best, Deg(x));
    return best;
}

std::vector<std::size_t> WeightedGraph::hop_distances(Vertex x) const {
    std::vector<std::size_t> d(size(), std::numeric_limits<std::size_t>::max());
    std::queue<Vertex> q;
    d.at(x) = 0;
    q.push(x);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (const auto& e : adjacency_[v]) {
            if (e.b > 0 && d[e.to] == std::numeric_limits<std::size_t>::max()) {
                d[e.to] = d[v] + 1;
                q.push(e.to);
            }
        }
    }
    return d;
}

bool WeightedGraph::connected() const {
    if (size() == 0) return true;
    auto d = hop_distances(0);
    return std::none_of(d.begin(), d.end(),
                        [](std::size_t v) { return v == std::numeric_limits<std::size_t>::max(); });
}

bool WeightedGraph::operator==(const WeightedGraph& o) const {
    if (ids_ != o.ids_ || m_ != o.m_ || kind_ != o.kind_) return false;
    for (std::size_t x = 0; x < size(); ++x) {
        if (adjacency_[x].size() != o.adjacency_[x].size()) return false;
        for (std::size_t k = 0; k < adjacency_[x].size(); ++k) {
            if (adjacency_[x][k].to != o.adjacency_[x][k].to || adjacency_[x][k].b != o.adjacency_[x][k].b)
                return false;
        }
    }
    return true;
}

WeightedGraph make_graph(std::vector<std::string> ids, const std::vector<Edge>& edges,
                         MeasureKind kind, std::vector<double> m) {
    const std::size_t n = ids.size();
    std::set<std::string> seen(ids.begin(), ids.end());
    if (seen.size() != n) throw DomainError("duplicate vertex identifiers");
    std::vector<std::vector<Neighbor>> adj(n);
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n) throw DomainError("edge endpoint out of range");
        if (e.u == e.v) throw DomainError("self-loop at vertex " + ids[e.u]);
        if (!(e.b > 0) || !std::isfinite(e.b))
            throw DomainError("edge weight must be positive and finite");
        auto key = std::minmax(e.u, e.v);
        if (!pairs.insert(key).second)
            throw DomainError("edge listed twice: " + ids[e.u] + " -- " + ids[e.v]);
        adj[e.u].push_back({e.v, e.b});
        adj[e.v].push_back({e.u, e.b});
    }
    std::vector<double> measure(n, 1.0);
    if (kind == MeasureKind::normalizing) {
        for (Vertex x = 0; x < n; ++x) {
            double s = 0.0;
            for (const auto& nb : adj[x]) s += nb.b;
            if (!(s > 0)) throw DomainError("normalizing measure needs positive degree at " + ids[x]);
            measure[x] = s;
        }
    } else if (kind == MeasureKind::explicit_measure) {
        if (m.size() != n) throw DomainError("explicit measure has wrong length");
        for (double v : m)
            if (!(v > 0) || !std::isfinite(v)) throw DomainError("explicit measure must be positive");
        measure = std::move(m);
    }
    return WeightedGraph(std::move(ids), std::move(adj), std::move(measure), kind);
}

double vertex_degree(const WeightedGraph& g, Vertex x) {
    if (x >= g.size()) throw DomainError("unknown vertex");
    return g.Deg(x);
}

std::vector<double> apply_laplacian(const WeightedGraph& g, std::span<const double> f) {
    if (f.size() != g.size()) throw DomainError("function length does not match vertex count");
    std::vector<double> out(g.size());
    for (Vertex x = 0; x < g.size(); ++x) {
        double s = 0.0;
        for (const auto& e : g.neighbors(x)) s += e.b * (f[x] - f[e.to]);
        out[x] = s / g.m(x);
    }
    return out;
}

double dirichlet_energy(const WeightedGraph& g, std::span<const double> f) {
    if (f.size() != g.size()) throw DomainError("function length does not match vertex count");
    double s = 0.0;
    for (Vertex x = 0; x < g.size(); ++x)
        for (const auto& e : g.neighbors(x))
            if (x < e.to) s += e.b * (f[x] - f[e.to]) * (f[x] - f[e.to]);
    return s;
}

Matrix dirichlet_form_matrix(const WeightedGraph& g, const VertexSubset& U) {
    if (U.empty()) throw DomainError("Dirichlet form needs a nonempty subset");
    const std::size_t k = U.size();
    Matrix A(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        Vertex x = U[i];
        if (x >= g.size()) throw DomainError("subset vertex out of range");
        A(i, i) = g.Deg(x);
        const double sx = std::sqrt(g.m(x));
        for (const auto& e : g.neighbors(x)) {
            std::size_t j = U.position(e.to);
            if (j < k) A(i, j) = -e.b / (sx * std::sqrt(g.m(e.to)));
        }
    }
    return A;
}

std::vector<std::string> validate(const WeightedGraph& g) {
    std::vector<std::string> issues;
    const std::size_t n = g.size();
    std::set<std::string> ids(g.ids().begin(), g.ids().end());
    if (ids.size() != n) issues.push_back("duplicate vertex identifiers");
    for (Vertex x = 0; x < n; ++x) {
        if (!(g.m(x) > 0) || !std::isfinite(g.m(x)))
            issues.push_back("nonpositive measure at " + g.id(x));
        double s = 0.0;
        Vertex prev = n;
        for (const auto& e : g.neighbors(x)) {
            if (e.to == x) issues.push_back("self-loop at " + g.id(x));
            if (e.to == prev) issues.push_back("repeated neighbor at " + g.id(x));
            prev = e.to;
            if (e.b < 0 || !std::isfinite(e.b))
                issues.push_back("invalid weight on " + g.id(x) + " -- " + g.id(e.to));
            if (e.to < n && e.to != x && g.b(e.to, x) != e.b && x < e.to)
                issues.push_back("asymmetric weight on " + g.id(x) + " -- " + g.id(e.to));
            s += e.b;
        }
        if (std::abs(s - g.deg(x)) > 1e-12 * std::max(1.0, s))
            issues.push_back("cached degree mismatch at " + g.id(x));
        if (g.measure_kind() == MeasureKind::normalizing && g.m(x) != g.deg(x))
            issues.push_back("normalizing measure differs from degree at " + g.id(x));
        if (g.measure_kind() == MeasureKind::counting && g.m(x) != 1.0)
            issues.push_back("counting measure differs from 1 at " + g.id(x));
    }
    // Arcs present only in one direction, with the smaller endpoint missing it.
    for (Vertex x = 0; x < n; ++x)
        for (const auto& e : g.neighbors(x))
            if (e.to < x && e.to < n && g.b(e.to, x) == 0.0 && e.b != 0.0)
                issues.push_back("asymmetric weight on " + g.id(e.to) + " -- " + g.id(x));
    return issues;
}

} // namespace heatfk
