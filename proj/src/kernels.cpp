#include "heatfk/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <queue>

#include "heatfk/eigen.hpp"
#include "heatfk/error.hpp"

namespace heatfk {

namespace {

std::vector<double> dijkstra(const WeightedGraph& g, const std::vector<std::vector<double>>& arc_len, Vertex src) {
    const std::size_t n = g.size();
    std::vector<double> d(n, std::numeric_limits<double>::infinity());
    using Item = std::pair<double, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    d[src] = 0.0;
    pq.push({0.0, src});
    while (!pq.empty()) {
        auto [dv, v] = pq.top();
        pq.pop();
        if (dv > d[v]) continue;
        auto nb = g.neighbors(v);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const double cand = dv + arc_len[v][k];
            if (cand < d[nb[k].to]) {
                d[nb[k].to] = cand;
                pq.push({cand, nb[k].to});
            }
        }
    }
    return d;
}

} // namespace

Matrix shortest_path_table(const WeightedGraph& g, const std::vector<std::vector<double>>& arc_len, Exec exec) {
    const std::size_t n = g.size();
    Matrix out(n, n);
    auto fill = [&](std::size_t s) {
        auto d = dijkstra(g, arc_len, s);
        std::copy(d.begin(), d.end(), out.row(s));
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(n); ++s) fill(static_cast<std::size_t>(s));
    } else {
        for (std::size_t s = 0; s < n; ++s) fill(s);
    }
    // Dijkstra sums edge lengths in path order; symmetrize to the smaller of the
    // two directions so the table is exactly symmetric.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out(i, j) = out(j, i) = std::min(out(i, j), out(j, i));
    return out;
}

KilledGenerator::KilledGenerator(const WeightedGraph& g, const VertexSubset& host) : host_(host) {
    const std::size_t k = host_.size();
    rates_.resize(k);
    stay_.resize(k);
    q_ = 0.0;
    for (std::size_t i = 0; i < k; ++i) q_ = std::max(q_, g.Deg(host_[i]));
    for (std::size_t i = 0; i < k; ++i) {
        const Vertex x = host_[i];
        for (const auto& e : g.neighbors(x)) {
            const std::size_t j = host_.position(e.to);
            if (j < k && e.b > 0) rates_[i].push_back({j, e.b / g.m(x)});
        }
        stay_[i] = q_ > 0 ? 1.0 - g.Deg(x) / q_ : 1.0;
    }
    hops_.assign(k, std::vector<std::size_t>(k, std::numeric_limits<std::size_t>::max()));
    for (std::size_t s = 0; s < k; ++s) {
        auto& d = hops_[s];
        std::queue<std::size_t> qu;
        d[s] = 0;
        qu.push(s);
        while (!qu.empty()) {
            std::size_t v = qu.front();
            qu.pop();
            for (const auto& [w, r] : rates_[v]) {
                if (d[w] == std::numeric_limits<std::size_t>::max()) {
                    d[w] = d[v] + 1;
                    qu.push(w);
                }
            }
        }
    }
}

std::vector<double> KilledGenerator::series(double t, std::vector<double> v, std::size_t min_terms,
                                            const std::vector<char>& reachable) const {
    const std::size_t k = size();
    if (t == 0.0 || q_ == 0.0) return v;
    const double lam = q_ * t;
    const double loglam = std::log(lam);
    const double vmax = *std::max_element(v.begin(), v.end());
    std::vector<double> acc(k, 0.0), next(k);
    const std::size_t start_check = std::max<std::size_t>(min_terms, static_cast<std::size_t>(std::ceil(lam)) + 1);
    const std::size_t hard_cap = start_check + static_cast<std::size_t>(40.0 * std::sqrt(lam) + 400.0);
    for (std::size_t j = 0;; ++j) {
        const double w = std::exp(-lam + static_cast<double>(j) * loglam - std::lgamma(static_cast<double>(j) + 1.0));
        for (std::size_t i = 0; i < k; ++i) acc[i] += w * v[i];
        if (j >= start_check) {
            // Poisson tail beyond j: w_{j+1} / (1 − lam/(j+2)) bounds Σ_{i>j} w_i
            // and P^i is substochastic, so entries of P^i v stay below max v.
            const double wn = w * lam / static_cast<double>(j + 1);
            const double tail = vmax * wn / (1.0 - lam / static_cast<double>(j + 2));
            double floor_acc = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < k; ++i)
                if (reachable[i]) floor_acc = std::min(floor_acc, acc[i]);
            if (tail <= 1e-17 * floor_acc || tail < 1e-300) break;
            if (j > hard_cap) throw PrecisionError("uniformized series failed to converge");
        }
        for (std::size_t i = 0; i < k; ++i) {
            double s = stay_[i] * v[i];
            for (const auto& [jj, r] : rates_[i]) s += (r / q_) * v[jj];
            next[i] = s;
        }
        v.swap(next);
    }
    return acc;
}

std::vector<double> KilledGenerator::column(double t, std::size_t y) const {
    if (t < 0) throw DomainError("heat kernel needs t >= 0");
    const std::size_t k = size();
    std::vector<double> v(k, 0.0);
    v.at(y) = 1.0;
    std::vector<char> reach(k, 0);
    std::size_t ecc = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (hops_[y][i] != std::numeric_limits<std::size_t>::max()) {
            reach[i] = 1;
            ecc = std::max(ecc, hops_[y][i]);
        }
    }
    return series(t, std::move(v), ecc, reach);
}

Matrix KilledGenerator::matrix(double t, Exec exec) const {
    const std::size_t k = size();
    Matrix out(k, k);
    auto fill = [&](std::size_t y) {
        auto col = column(t, y);
        for (std::size_t x = 0; x < k; ++x) out(x, y) = col[x];
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t y = 0; y < static_cast<std::ptrdiff_t>(k); ++y) fill(static_cast<std::size_t>(y));
    } else {
        for (std::size_t y = 0; y < k; ++y) fill(y);
    }
    return out;
}

std::vector<double> KilledGenerator::apply(double t, const std::vector<double>& f) const {
    if (t < 0) throw DomainError("heat semigroup needs t >= 0");
    const std::size_t k = size();
    if (f.size() != k) throw DomainError("function length does not match host size");
    std::vector<char> reach(k, 0);
    std::size_t ecc = 0;
    for (std::size_t y = 0; y < k; ++y) {
        if (f[y] < 0) throw DomainError("positive propagation needs f >= 0");
        if (f[y] == 0) continue;
        for (std::size_t i = 0; i < k; ++i) {
            if (hops_[y][i] != std::numeric_limits<std::size_t>::max()) {
                reach[i] = 1;
                ecc = std::max(ecc, hops_[y][i]);
            }
        }
    }
    return series(t, f, ecc, reach);
}

std::vector<std::uint32_t> ordered_masks(std::size_t k) {
    if (k > 31) throw DomainError("subset enumeration supports at most 31 vertices");
    std::vector<std::uint32_t> out;
    out.reserve((std::size_t(1) << k) - 1);
    std::vector<std::size_t> comb;
    for (std::size_t s = 1; s <= k; ++s) {
        comb.resize(s);
        for (std::size_t i = 0; i < s; ++i) comb[i] = i;
        while (true) {
            std::uint32_t m = 0;
            for (std::size_t i : comb) m |= (1u << i);
            out.push_back(m);
            // Next combination in lexicographic order.
            std::ptrdiff_t i = static_cast<std::ptrdiff_t>(s) - 1;
            while (i >= 0 && comb[i] == k - s + static_cast<std::size_t>(i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return out;
}

bool mask_connected(std::uint32_t mask, const std::vector<std::uint32_t>& adj) {
    if (mask == 0) return false;
    std::uint32_t seen = mask & (~mask + 1u);
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t grow = 0;
        std::uint32_t f = frontier;
        while (f) {
            const int i = std::countr_zero(f);
            f &= f - 1;
            grow |= adj[i];
        }
        grow &= mask & ~seen;
        seen |= grow;
        frontier = grow;
    }
    return seen == mask;
}

SubsetSearchResult min_subset_objective(const Matrix& A, const std::vector<double>& w,
                                        const std::vector<std::uint32_t>& adj, double two_over_n, Exec exec) {
    const std::size_t k = A.rows();
    if (k == 0) throw DomainError("subset search needs a nonempty ground set");
    auto all = ordered_masks(k);
    std::vector<std::uint32_t> masks;
    masks.reserve(all.size());
    for (auto m : all)
        if (mask_connected(m, adj)) masks.push_back(m);

    auto evaluate = [&](std::uint32_t mask, double& lambda) {
        std::vector<std::size_t> idx;
        double mass = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (1u << i)) {
                idx.push_back(i);
                mass += w[i];
            }
        }
        Matrix sub(idx.size(), idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = A(idx[a], idx[b]);
        lambda = smallest_eigenvalue(sub);
        return lambda * std::pow(mass, two_over_n);
    };

    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(masks.size());
    double best_obj = std::numeric_limits<double>::infinity();
    double best_lambda = 0.0;
    std::ptrdiff_t best_idx = count;
    if (exec == Exec::parallel) {
#pragma omp parallel
        {
            double lo = std::numeric_limits<double>::infinity(), llam = 0.0;
            std::ptrdiff_t li = count;
#pragma omp for schedule(static)
            for (std::ptrdiff_t i = 0; i < count; ++i) {
                double lam = 0.0;
                const double v = evaluate(masks[i], lam);
                if (v < lo || (v == lo && i < li)) {
                    lo = v;
                    li = i;
                    llam = lam;
                }
            }
#pragma omp critical
            {
                if (lo < best_obj || (lo == best_obj && li < best_idx)) {
                    best_obj = lo;
                    best_idx = li;
                    best_lambda = llam;
                }
            }
        }
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            double lam = 0.0;
            const double v = evaluate(masks[i], lam);
            if (v < best_obj) {
                best_obj = v;
                best_idx = i;
                best_lambda = lam;
            }
        }
    }
    SubsetSearchResult r;
    r.mask = masks[static_cast<std::size_t>(best_idx)];
    r.lambda = best_lambda;
    r.objective = best_obj;
    r.examined = masks.size();
    return r;
}

} // namespace heatfk
