#include "heatfk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "heatfk/error.hpp"

namespace heatfk {

namespace {

struct Ground {
    VertexSubset full_ball;
    VertexSubset set;
    double ball_measure = 0.0;
};

Ground ground_set(const WeightedGraph& g, const IntrinsicMetric& metric, Vertex x, double r, const FkOptions& opt) {
    Ground gr;
    gr.full_ball = ball(metric, x, r);
    gr.ball_measure = ball_volume(g, metric, x, r);
    gr.set = opt.host ? intersect(gr.full_ball, *opt.host) : gr.full_ball;
    if (gr.set.empty()) throw DomainError("ball has no vertex inside the host");
    if (gr.set.size() == g.size())
        throw DomainError("degenerate ball: it contains the whole connected graph, so lambda = 0");
    return gr;
}

std::vector<std::uint32_t> neighbor_masks(const WeightedGraph& g, const VertexSubset& W) {
    std::vector<std::uint32_t> adj(W.size(), 0);
    for (std::size_t i = 0; i < W.size(); ++i)
        for (const auto& e : g.neighbors(W[i])) {
            const std::size_t j = W.position(e.to);
            if (j < W.size() && e.b > 0) adj[i] |= (1u << j);
        }
    return adj;
}

double subset_objective(const Matrix& A, const std::vector<double>& w, const std::vector<char>& in, double two_over_n,
                        double& lambda) {
    std::vector<std::size_t> idx;
    double mass = 0.0;
    for (std::size_t i = 0; i < in.size(); ++i)
        if (in[i]) {
            idx.push_back(i);
            mass += w[i];
        }
    Matrix sub(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = A(idx[a], idx[b]);
    lambda = smallest_eigenvalue(sub);
    return lambda * std::pow(mass, two_over_n);
}

VertexSubset members(const VertexSubset& W, const std::vector<char>& in) {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < in.size(); ++i)
        if (in[i]) out.push_back(W[i]);
    return VertexSubset(std::move(out));
}

void check_n(double n) {
    if (!(n > 0)) throw DomainError("FK dimension n must be positive");
}

} // namespace

std::string to_string(FkMode mode) { return mode == FkMode::exact ? "exact" : "heuristic"; }

double dirichlet_lambda(const WeightedGraph& g, const VertexSubset& U) {
    if (U.empty()) throw DomainError("lambda needs a nonempty subset");
    return smallest_eigenvalue(dirichlet_form_matrix(g, U));
}

double spectral_bottom(const WeightedGraph& g, const SpectralMode& mode) {
    if (!mode.dirichlet) return 0.0;
    if (mode.host.size() == g.size() && g.connected()) return 0.0;
    return dirichlet_lambda(g, mode.host);
}

FKEstimate fk_constant_exact(const WeightedGraph& g, const IntrinsicMetric& metric, Vertex x, double r, double n,
                             const FkOptions& opt) {
    check_n(n);
    auto gr = ground_set(g, metric, x, r, opt);
    if (gr.set.size() > opt.cap)
        throw DomainError("ball has " + std::to_string(gr.set.size()) + " vertices, above the enumeration cap " +
                          std::to_string(opt.cap));
    const Matrix A = dirichlet_form_matrix(g, gr.set);
    std::vector<double> w(gr.set.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = g.m(gr.set[i]);
    auto res = min_subset_objective(A, w, neighbor_masks(g, gr.set), 2.0 / n, opt.exec);

    FKEstimate est;
    est.n = n;
    est.r = r;
    est.center = x;
    est.ball = gr.set;
    est.ball_measure = gr.ball_measure;
    est.mode = FkMode::exact;
    est.examined = res.examined;
    est.lambda_witness = res.lambda;
    std::vector<Vertex> wit;
    for (std::size_t i = 0; i < gr.set.size(); ++i)
        if (res.mask & (1u << i)) wit.push_back(gr.set[i]);
    est.witness = VertexSubset(std::move(wit));
    est.a = res.objective * r * r / std::pow(gr.ball_measure, 2.0 / n);
    return est;
}

FKEstimate fk_constant_heuristic(const WeightedGraph& g, const IntrinsicMetric& metric, Vertex x, double r,
                                 double n, const FkOptions& opt) {
    check_n(n);
    auto gr = ground_set(g, metric, x, r, opt);
    const std::size_t k = gr.set.size();
    const Matrix A = dirichlet_form_matrix(g, gr.set);
    std::vector<double> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = g.m(gr.set[i]);
    const double p = 2.0 / n;

    std::vector<char> best(k, 0);
    double best_obj = std::numeric_limits<double>::infinity(), best_lambda = 0.0;
    std::size_t examined = 0;

    // Superlevel sets of the ground state, largest values first.
    auto ed = eigendecompose(A);
    std::vector<std::size_t> ord(k);
    std::iota(ord.begin(), ord.end(), std::size_t{0});
    std::stable_sort(ord.begin(), ord.end(),
                     [&](std::size_t a, std::size_t b) { return std::abs(ed.vectors(a, 0)) > std::abs(ed.vectors(b, 0)); });
    std::vector<char> cur(k, 0);
    for (std::size_t s = 0; s < k; ++s) {
        cur[ord[s]] = 1;
        double lam = 0.0;
        const double v = subset_objective(A, w, cur, p, lam);
        ++examined;
        if (v < best_obj) {
            best_obj = v;
            best_lambda = lam;
            best = cur;
        }
    }
    // Greedy toggles, best strict improvement per round.
    for (std::size_t round = 0; round < 4 * k + 4; ++round) {
        double round_obj = best_obj, round_lambda = best_lambda;
        std::ptrdiff_t move = -1;
        std::size_t size = static_cast<std::size_t>(std::count(best.begin(), best.end(), 1));
        for (std::size_t i = 0; i < k; ++i) {
            if (best[i] && size == 1) continue;
            auto trial = best;
            trial[i] = !trial[i];
            double lam = 0.0;
            const double v = subset_objective(A, w, trial, p, lam);
            ++examined;
            if (v < round_obj) {
                round_obj = v;
                round_lambda = lam;
                move = static_cast<std::ptrdiff_t>(i);
            }
        }
        if (move < 0) break;
        best[static_cast<std::size_t>(move)] = !best[static_cast<std::size_t>(move)];
        best_obj = round_obj;
        best_lambda = round_lambda;
    }

    FKEstimate est;
    est.n = n;
    est.r = r;
    est.center = x;
    est.ball = gr.set;
    est.ball_measure = gr.ball_measure;
    est.mode = FkMode::heuristic;
    est.examined = examined;
    est.witness = members(gr.set, best);
    est.lambda_witness = best_lambda;
    est.a = best_obj * r * r / std::pow(gr.ball_measure, p);
    return est;
}

std::vector<FkRow> fk_profile(const WeightedGraph& g, const IntrinsicMetric& metric, const std::vector<Vertex>& centers,
                              double R1, double R2, const std::function<double(double)>& n_of_r,
                              std::vector<double> r_grid, const FkOptions& opt) {
    if (R1 > R2) throw DomainError("fk_profile needs R1 <= R2");
    std::vector<FkRow> rows;
    for (Vertex x : centers) {
        std::vector<double> radii;
        if (r_grid.empty()) {
            radii.push_back(R1);
            for (double d : ball_radii(metric, x))
                if (d > R1 && d < R2) radii.push_back(d);
            if (R2 > R1) radii.push_back(R2);
        } else {
            for (double r : r_grid)
                if (r >= R1 && r <= R2) radii.push_back(r);
        }
        for (double r : radii) {
            FkRow row{x, r, {}, false};
            try {
                const std::size_t k = opt.host ? intersect(ball(metric, x, r), *opt.host).size() : ball_size(metric, x, r);
                if (k <= opt.cap) {
                    row.estimate = fk_constant_exact(g, metric, x, r, n_of_r(r), opt);
                    row.certified = true;
                } else {
                    row.estimate = fk_constant_heuristic(g, metric, x, r, n_of_r(r), opt);
                }
            } catch (const DomainError&) {
                // Degenerate ball: (FK) cannot hold with a > 0.
                row.estimate.a = 0.0;
                row.estimate.r = r;
                row.estimate.n = n_of_r(r);
                row.estimate.center = x;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

AbsoluteFk absolute_fk_exact(const WeightedGraph& g, const VertexSubset& ground, double n, const FkOptions& opt) {
    check_n(n);
    if (ground.empty()) throw DomainError("absolute FK needs a nonempty ground set");
    if (ground.size() == g.size()) throw DomainError("degenerate ground set: it contains the whole connected graph");
    if (ground.size() > opt.cap) throw DomainError("ground set above the enumeration cap");
    const Matrix A = dirichlet_form_matrix(g, ground);
    std::vector<double> w(ground.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = g.m(ground[i]);
    auto res = min_subset_objective(A, w, neighbor_masks(g, ground), 2.0 / n, opt.exec);
    AbsoluteFk out;
    out.a = res.objective;
    std::vector<Vertex> wit;
    for (std::size_t i = 0; i < ground.size(); ++i)
        if (res.mask & (1u << i)) wit.push_back(ground[i]);
    out.witness = VertexSubset(std::move(wit));
    out.certified = true;
    return out;
}

double fk_monotone_lower_bound(const WeightedGraph& g, const VertexSubset& B, double ball_measure, double r, double n) {
    check_n(n);
    double min_m = std::numeric_limits<double>::infinity();
    for (Vertex v : B) min_m = std::min(min_m, g.m(v));
    return dirichlet_lambda(g, B) * r * r * std::pow(min_m / ball_measure, 2.0 / n);
}

} // namespace heatfk
