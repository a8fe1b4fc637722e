#include "heatfk/families.hpp"

#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "heatfk/error.hpp"
#include "heatfk/rng.hpp"

namespace heatfk {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

int to_int(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw DomainError("expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw DomainError("expected an integer, got '" + s + "'");
    return v;
}

double to_double(const std::string& s) {
    std::istringstream in(s);
    in.imbue(std::locale::classic());
    double v = 0;
    in >> v;
    if (in.fail() || !in.eof()) throw DomainError("expected a number, got '" + s + "'");
    return v;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError("invalid family parameters: " + what);
}

std::string fmt_short(double v) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << v;
    return out.str();
}

// Relabel vertices of (ids, edges) by BFS order from vertex 0, neighbors in
// increasing original index.
void bfs_relabel(std::vector<std::string>& ids, std::vector<Edge>& edges) {
    const std::size_t n = ids.size();
    std::vector<std::set<Vertex>> adj(n);
    for (const auto& e : edges) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<Vertex> order;
    std::vector<std::size_t> newpos(n, n);
    std::queue<Vertex> q;
    q.push(0);
    newpos[0] = 0;
    order.push_back(0);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : adj[v]) {
            if (newpos[w] == n) {
                newpos[w] = order.size();
                order.push_back(w);
                q.push(w);
            }
        }
    }
    std::vector<std::string> new_ids(n);
    for (std::size_t i = 0; i < n; ++i) new_ids[i] = std::to_string(i);
    for (auto& e : edges) {
        e.u = newpos[e.u];
        e.v = newpos[e.v];
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    ids = std::move(new_ids);
}

std::vector<int> antitree_sizes(AntitreeGrowth growth, int depth) {
    std::vector<int> sizes;
    for (int k = 0; k <= depth; ++k) {
        switch (growth) {
        case AntitreeGrowth::linear: sizes.push_back(k + 1); break;
        case AntitreeGrowth::quadratic: sizes.push_back((k + 1) * (k + 1)); break;
        case AntitreeGrowth::doubling: sizes.push_back(1 << k); break;
        }
    }
    return sizes;
}

std::string growth_name(AntitreeGrowth g) {
    switch (g) {
    case AntitreeGrowth::linear: return "linear";
    case AntitreeGrowth::quadratic: return "quadratic";
    case AntitreeGrowth::doubling: return "doubling";
    }
    return "linear";
}

} // namespace

std::string FamilySpec::shape_name() const {
    switch (kind) {
    case FamilyKind::path: return "P_" + std::to_string(length);
    case FamilyKind::cycle: return "C_" + std::to_string(length);
    case FamilyKind::complete: return "K_" + std::to_string(count);
    case FamilyKind::star: return "star_" + std::to_string(count);
    case FamilyKind::lattice_box: return "box_" + std::to_string(dim) + "_" + std::to_string(length);
    case FamilyKind::binary_tree: return "bintree_" + std::to_string(depth);
    case FamilyKind::antitree:
        return growth == AntitreeGrowth::linear ? "antitree_" + std::to_string(depth)
                                                : "antitree_" + growth_name(growth) + "_" + std::to_string(depth);
    case FamilyKind::random_weighted:
        return "random_" + std::to_string(count) + "_" + fmt_short(p) + "_" + fmt_short(w_lo) + "_" +
               fmt_short(w_hi) + "_" + std::to_string(seed);
    }
    return "?";
}

std::string FamilySpec::name() const { return shape_name() + "/" + to_string(measure); }

FamilySpec FamilySpec::parse(const std::string& text, MeasureKind measure) {
    // Catalogue-style shape names first.
    auto under = split(text, '_');
    if (under.size() >= 2 && text.find(':') == std::string::npos) {
        const std::string& head = under[0];
        if (head == "P" && under.size() == 2) return path_spec(to_int(under[1]), measure);
        if (head == "C" && under.size() == 2) return cycle_spec(to_int(under[1]), measure);
        if (head == "K" && under.size() == 2) return complete_spec(to_int(under[1]), measure);
        if (head == "star" && under.size() == 2) return star_spec(to_int(under[1]), measure);
        if (head == "box" && under.size() == 3) return box_spec(to_int(under[1]), to_int(under[2]), measure);
        if (head == "bintree" && under.size() == 2) return binary_tree_spec(to_int(under[1]), measure);
        if (head == "antitree" && under.size() == 2)
            return antitree_spec(AntitreeGrowth::linear, to_int(under[1]), measure);
        if (head == "random" && under.size() == 6)
            return random_spec(to_int(under[1]), to_double(under[2]), to_double(under[3]), to_double(under[4]),
                               static_cast<std::uint64_t>(std::stoull(under[5])), measure);
    }
    auto parts = split(text, ':');
    const std::string& k = parts[0];
    auto need = [&](std::size_t count) {
        if (parts.size() != count) throw DomainError("family '" + text + "' has the wrong number of fields");
    };
    if (k == "path") { need(2); return path_spec(to_int(parts[1]), measure); }
    if (k == "cycle") { need(2); return cycle_spec(to_int(parts[1]), measure); }
    if (k == "complete") { need(2); return complete_spec(to_int(parts[1]), measure); }
    if (k == "star") { need(2); return star_spec(to_int(parts[1]), measure); }
    if (k == "box") { need(3); return box_spec(to_int(parts[1]), to_int(parts[2]), measure); }
    if (k == "binary_tree") { need(2); return binary_tree_spec(to_int(parts[1]), measure); }
    if (k == "antitree") {
        if (parts.size() == 2) return antitree_spec(AntitreeGrowth::linear, to_int(parts[1]), measure);
        need(3);
        AntitreeGrowth g;
        if (parts[2] == "linear") g = AntitreeGrowth::linear;
        else if (parts[2] == "quadratic") g = AntitreeGrowth::quadratic;
        else if (parts[2] == "doubling") g = AntitreeGrowth::doubling;
        else throw DomainError("unknown anti-tree growth '" + parts[2] + "'");
        return antitree_spec(g, to_int(parts[1]), measure);
    }
    if (k == "random") {
        need(6);
        return random_spec(to_int(parts[1]), to_double(parts[2]), to_double(parts[3]), to_double(parts[4]),
                           static_cast<std::uint64_t>(std::stoull(parts[5])), measure);
    }
    throw DomainError("unknown graph family '" + text + "'");
}

FamilySpec path_spec(int n, MeasureKind measure) {
    FamilySpec s;
    s.kind = FamilyKind::path;
    s.length = n;
    s.measure = measure;
    return s;
}

FamilySpec cycle_spec(int n, MeasureKind measure) {
    FamilySpec s;
    s.kind = FamilyKind::cycle;
    s.length = n;
    s.measure = measure;
    return s;
}

FamilySpec complete_spec(int n, MeasureKind measure) {
    FamilySpec s;
    s.kind = FamilyKind::complete;
    s.count = n;
    s.measure = measure;
    return s;
}

FamilySpec star_spec(int leaves, MeasureKind measure) {
    FamilySpec s;
    s.kind = FamilyKind::star;
    s.count = leaves;
    s.measure = measure;
    return s;
}

FamilySpec box_spec(int dim, int side, MeasureKind measure) {
    FamilySpec s;
    s.kind = FamilyKind::lattice_box;
    s.dim = dim;
    s.length = side;
    s.measure = measure;
    return s;
}

FamilySpec binary_tree_spec(int depth, MeasureKind measure) {
    FamilySpec s;
    s.kind = FamilyKind::binary_tree;
    s.depth = depth;
    s.measure = measure;
    return s;
}

FamilySpec antitree_spec(AntitreeGrowth growth, int depth, MeasureKind measure) {
    FamilySpec s;
    s.kind = FamilyKind::antitree;
    s.growth = growth;
    s.depth = depth;
    s.measure = measure;
    return s;
}

FamilySpec random_spec(int n, double p, double lo, double hi, std::uint64_t seed, MeasureKind measure) {
    FamilySpec s;
    s.kind = FamilyKind::random_weighted;
    s.count = n;
    s.p = p;
    s.w_lo = lo;
    s.w_hi = hi;
    s.seed = seed;
    s.has_seed = true;
    s.measure = measure;
    return s;
}

WeightedGraph generate(const FamilySpec& spec) {
    std::vector<std::string> ids;
    std::vector<Edge> edges;
    switch (spec.kind) {
    case FamilyKind::path:
    case FamilyKind::cycle: {
        const int n = spec.length;
        require(n >= 1, "path/cycle needs at least one vertex");
        if (spec.kind == FamilyKind::cycle) require(n >= 3, "cycle needs at least 3 vertices");
        for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
        for (int i = 0; i + 1 < n; ++i) edges.push_back({Vertex(i), Vertex(i + 1), 1.0});
        if (spec.kind == FamilyKind::cycle) edges.push_back({0, Vertex(n - 1), 1.0});
        break;
    }
    case FamilyKind::complete: {
        const int n = spec.count;
        require(n >= 2, "complete graph needs at least 2 vertices");
        for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.push_back({Vertex(i), Vertex(j), 1.0});
        break;
    }
    case FamilyKind::star: {
        const int leaves = spec.count;
        require(leaves >= 1, "star needs at least one leaf");
        ids.push_back("c");
        for (int i = 1; i <= leaves; ++i) {
            ids.push_back("l" + std::to_string(i));
            edges.push_back({0, Vertex(i), 1.0});
        }
        break;
    }
    case FamilyKind::lattice_box: {
        const int d = spec.dim, L = spec.length;
        require(d >= 1 && d <= 4, "lattice dimension must be in [1,4]");
        require(L >= 1, "lattice side must be positive");
        std::size_t side = static_cast<std::size_t>(L) + 1;
        std::size_t n = 1;
        for (int k = 0; k < d; ++k) n *= side;
        // Lexicographic order on coordinates: first coordinate most significant.
        for (std::size_t idx = 0; idx < n; ++idx) {
            std::string name;
            std::size_t rem = idx;
            std::vector<std::size_t> c(d);
            for (int k = d - 1; k >= 0; --k) {
                c[k] = rem % side;
                rem /= side;
            }
            for (int k = 0; k < d; ++k) name += (k ? "_" : "") + std::to_string(c[k]);
            ids.push_back(name);
        }
        std::size_t stride = 1;
        for (int k = d - 1; k >= 0; --k) {
            for (std::size_t idx = 0; idx < n; ++idx) {
                std::size_t ck = (idx / stride) % side;
                if (ck + 1 < side) edges.push_back({idx, idx + stride, 1.0});
            }
            stride *= side;
        }
        std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
            return a.u != b.u ? a.u < b.u : a.v < b.v;
        });
        break;
    }
    case FamilyKind::binary_tree: {
        require(spec.depth >= 0 && spec.depth <= 20, "binary tree depth must be in [0,20]");
        std::size_t n = (std::size_t(1) << (spec.depth + 1)) - 1;
        for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
        for (std::size_t i = 1; i < n; ++i) edges.push_back({(i - 1) / 2, i, 1.0});
        require(n >= 1, "empty tree");
        break;
    }
    case FamilyKind::antitree: {
        require(spec.depth >= 1, "anti-tree depth must be at least 1");
        auto sizes = antitree_sizes(spec.growth, spec.depth);
        std::vector<std::size_t> start;
        for (std::size_t k = 0; k < sizes.size(); ++k) {
            start.push_back(ids.size());
            for (int i = 0; i < sizes[k]; ++i) ids.push_back(std::to_string(k) + "." + std::to_string(i));
        }
        for (std::size_t k = 0; k + 1 < sizes.size(); ++k)
            for (int i = 0; i < sizes[k]; ++i)
                for (int j = 0; j < sizes[k + 1]; ++j)
                    edges.push_back({start[k] + i, start[k + 1] + j, 1.0});
        break;
    }
    case FamilyKind::random_weighted: {
        require(spec.has_seed, "random graphs need an explicit seed");
        require(spec.count >= 2, "random graph needs at least 2 vertices");
        require(spec.p >= 0 && spec.p <= 1, "edge probability must be in [0,1]");
        require(spec.w_lo > 0 && spec.w_hi >= spec.w_lo, "weight range must be positive and ordered");
        const std::size_t n = static_cast<std::size_t>(spec.count);
        Lcg64 rng(spec.seed);
        for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
        std::set<std::pair<Vertex, Vertex>> have;
        // Random recursive tree keeps the graph connected, then Bernoulli(p)
        // edges on the remaining pairs in lexicographic order.
        for (std::size_t i = 1; i < n; ++i) {
            Vertex parent = static_cast<Vertex>(rng.below(i));
            double w = rng.uniform(spec.w_lo, spec.w_hi);
            edges.push_back({parent, i, w});
            have.insert({parent, i});
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (have.count({i, j})) continue;
                if (rng.uniform() < spec.p) edges.push_back({i, j, rng.uniform(spec.w_lo, spec.w_hi)});
            }
        }
        bfs_relabel(ids, edges);
        break;
    }
    }
    return make_graph(std::move(ids), edges, spec.measure);
}

std::vector<NamedGraphSpec> catalogue() {
    std::vector<FamilySpec> shapes = {
        path_spec(20, MeasureKind::counting),
        path_spec(41, MeasureKind::counting),
        cycle_spec(8, MeasureKind::counting),
        cycle_spec(16, MeasureKind::counting),
        complete_spec(10, MeasureKind::counting),
        star_spec(16, MeasureKind::counting),
        box_spec(2, 5, MeasureKind::counting),
        antitree_spec(AntitreeGrowth::linear, 4, MeasureKind::counting),
        random_spec(24, 0.3, 0.5, 2.0, 7, MeasureKind::counting),
    };
    std::vector<NamedGraphSpec> out;
    for (auto kind : {MeasureKind::counting, MeasureKind::normalizing}) {
        for (auto s : shapes) {
            s.measure = kind;
            out.push_back({s.name(), s});
        }
    }
    return out;
}

WeightedGraph with_measure(const WeightedGraph& g, MeasureKind kind) {
    if (kind == MeasureKind::explicit_measure) return with_measure(g, g.measure());
    return make_graph(g.ids(), g.edges(), kind);
}

WeightedGraph with_measure(const WeightedGraph& g, std::vector<double> m) {
    return make_graph(g.ids(), g.edges(), MeasureKind::explicit_measure, std::move(m));
}

} // namespace heatfk
