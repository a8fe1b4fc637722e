#include "heatfk/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "heatfk/error.hpp"

namespace heatfk {

std::string to_string(MetricRule rule) {
    switch (rule) {
    case MetricRule::combinatorial: return "combinatorial";
    case MetricRule::degree_path: return "degree_path";
    case MetricRule::custom: return "custom";
    }
    return "degree_path";
}

MetricRule metric_rule_from_string(const std::string& name) {
    if (name == "combinatorial") return MetricRule::combinatorial;
    if (name == "degree_path") return MetricRule::degree_path;
    if (name == "custom") return MetricRule::custom;
    throw DomainError("unknown metric rule '" + name + "'");
}

IntrinsicMetric IntrinsicMetric::build(const WeightedGraph& g, MetricRule rule, Exec exec) {
    if (rule == MetricRule::custom) throw DomainError("custom metrics need explicit edge lengths");
    std::vector<std::vector<double>> len(g.size());
    for (Vertex x = 0; x < g.size(); ++x) {
        for (const auto& e : g.neighbors(x)) {
            double w = 1.0;
            if (rule == MetricRule::degree_path) w = 1.0 / std::sqrt(std::max(g.Deg(x), g.Deg(e.to)));
            len[x].push_back(w);
        }
    }
    return finish(g, rule, std::move(len), exec);
}

IntrinsicMetric IntrinsicMetric::from_edge_lengths(const WeightedGraph& g, const std::vector<double>& lengths,
                                                   Exec exec) {
    auto edges = g.edges();
    if (lengths.size() != edges.size()) throw DomainError("one length per edge required");
    std::vector<std::vector<double>> len(g.size());
    for (Vertex x = 0; x < g.size(); ++x) len[x].assign(g.neighbors(x).size(), 0.0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!(lengths[i] > 0) || !std::isfinite(lengths[i])) throw DomainError("edge lengths must be positive");
        auto nu = g.neighbors(edges[i].u);
        auto nv = g.neighbors(edges[i].v);
        for (std::size_t k = 0; k < nu.size(); ++k)
            if (nu[k].to == edges[i].v) len[edges[i].u][k] = lengths[i];
        for (std::size_t k = 0; k < nv.size(); ++k)
            if (nv[k].to == edges[i].u) len[edges[i].v][k] = lengths[i];
    }
    return finish(g, MetricRule::custom, std::move(len), exec);
}

IntrinsicMetric IntrinsicMetric::finish(const WeightedGraph& g, MetricRule rule,
                                        std::vector<std::vector<double>> arc_len, Exec exec) {
    if (!g.connected()) throw DomainError("path metric needs a connected graph");
    IntrinsicMetric m;
    m.rule_ = rule;
    m.arc_len_ = std::move(arc_len);
    m.dist_ = shortest_path_table(g, m.arc_len_, exec);
    const std::size_t n = g.size();
    m.S_ = 0.0;
    for (Vertex x = 0; x < n; ++x) {
        auto nb = g.neighbors(x);
        for (std::size_t k = 0; k < nb.size(); ++k)
            if (nb[k].b > 0) m.S_ = std::max(m.S_, m.dist_(x, nb[k].to));
    }
    m.order_.resize(n);
    m.sorted_.resize(n);
    for (Vertex x = 0; x < n; ++x) {
        auto& ord = m.order_[x];
        ord.resize(n);
        std::iota(ord.begin(), ord.end(), Vertex{0});
        std::stable_sort(ord.begin(), ord.end(), [&](Vertex a, Vertex b) { return m.dist_(x, a) < m.dist_(x, b); });
        m.sorted_[x].resize(n);
        for (std::size_t i = 0; i < n; ++i) m.sorted_[x][i] = m.dist_(x, ord[i]);
    }
    auto slack = check_intrinsic(g, m);
    m.min_slack_ = slack.empty() ? 0.0 : *std::min_element(slack.begin(), slack.end());
    m.intrinsic_ = true;
    for (Vertex x = 0; x < n; ++x)
        if (slack[x] < -1e-12 * std::max(1.0, g.m(x))) m.intrinsic_ = false;
    return m;
}

double IntrinsicMetric::diameter() const {
    double d = 0.0;
    for (double v : dist_.data()) d = std::max(d, v);
    return d;
}

double IntrinsicMetric::eccentricity(Vertex x) const { return sorted_.at(x).back(); }

std::span<const Vertex> IntrinsicMetric::order_from(Vertex x) const { return order_.at(x); }
std::span<const double> IntrinsicMetric::sorted_from(Vertex x) const { return sorted_.at(x); }

IntrinsicMetric IntrinsicMetric::scaled(const WeightedGraph& g, double eps) const {
    if (!(eps > 0)) throw DomainError("metric scale must be positive");
    auto len = arc_len_;
    for (auto& row : len)
        for (auto& w : row) w *= eps;
    return finish(g, MetricRule::custom, std::move(len), Exec::serial);
}

std::vector<double> check_intrinsic(const WeightedGraph& g, const IntrinsicMetric& metric) {
    std::vector<double> slack(g.size());
    for (Vertex x = 0; x < g.size(); ++x) {
        double s = 0.0;
        for (const auto& e : g.neighbors(x)) s += e.b * metric(x, e.to) * metric(x, e.to);
        slack[x] = g.m(x) - s;
    }
    return slack;
}

std::size_t ball_size(const IntrinsicMetric& metric, Vertex x, double r) {
    if (r < 0) throw DomainError("ball radius must be nonnegative");
    auto d = metric.sorted_from(x);
    return static_cast<std::size_t>(std::upper_bound(d.begin(), d.end(), r) - d.begin());
}

VertexSubset ball(const IntrinsicMetric& metric, Vertex x, double r) {
    const std::size_t k = ball_size(metric, x, r);
    auto ord = metric.order_from(x);
    return VertexSubset::from_unsorted(std::vector<Vertex>(ord.begin(), ord.begin() + static_cast<std::ptrdiff_t>(k)));
}

double ball_volume(const WeightedGraph& g, const IntrinsicMetric& metric, Vertex x, double r) {
    const std::size_t k = ball_size(metric, x, r);
    auto ord = metric.order_from(x);
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += g.m(ord[i]);
    return s;
}

double open_ball_volume(const WeightedGraph& g, const IntrinsicMetric& metric, Vertex x, double r) {
    auto d = metric.sorted_from(x);
    const std::size_t k = static_cast<std::size_t>(std::lower_bound(d.begin(), d.end(), r) - d.begin());
    auto ord = metric.order_from(x);
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += g.m(ord[i]);
    return s;
}

std::vector<double> ball_radii(const IntrinsicMetric& metric, Vertex x) {
    auto d = metric.sorted_from(x);
    std::vector<double> out(d.begin(), d.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double triangle_violation(const IntrinsicMetric& metric) {
    const std::size_t n = metric.size();
    double worst = 0.0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                worst = std::max(worst, metric(x, z) - metric(x, y) - metric(y, z));
    return worst;
}

std::vector<double> cutoff(const IntrinsicMetric& metric, const VertexSubset& A, double R) {
    if (!(R > 0)) throw DomainError("cutoff radius must be positive");
    if (A.empty()) throw DomainError("cutoff needs a nonempty set");
    const std::size_t n = metric.size();
    std::vector<double> phi(n);
    for (Vertex x = 0; x < n; ++x) {
        double d = metric(x, A[0]);
        for (Vertex a : A) d = std::min(d, metric(x, a));
        phi[x] = std::max(0.0, 1.0 - d / R);
    }
    return phi;
}

std::vector<double> gradient_sq(const WeightedGraph& g, std::span<const double> f) {
    if (f.size() != g.size()) throw DomainError("function length does not match vertex count");
    std::vector<double> out(g.size());
    for (Vertex x = 0; x < g.size(); ++x) {
        double s = 0.0;
        for (const auto& e : g.neighbors(x)) s += e.b * (f[x] - f[e.to]) * (f[x] - f[e.to]);
        out[x] = s / g.m(x);
    }
    return out;
}

double gradient_sup_sq(const WeightedGraph& g, std::span<const double> f) {
    auto gs = gradient_sq(g, f);
    return gs.empty() ? 0.0 : *std::max_element(gs.begin(), gs.end());
}

std::vector<double> tent_function(const IntrinsicMetric& metric, Vertex o, double r, double S) {
    if (!(r > S)) throw DomainError("tent function needs r > S");
    std::vector<double> phi(metric.size());
    for (Vertex x = 0; x < metric.size(); ++x) phi[x] = std::max(0.0, r - S - metric(o, x));
    return phi;
}

double gradient_quotient(const WeightedGraph& g, std::span<const double> f) {
    auto gs = gradient_sq(g, f);
    double num = 0.0, den = 0.0;
    for (Vertex x = 0; x < g.size(); ++x) {
        num += g.m(x) * gs[x];
        den += g.m(x) * f[x] * f[x];
    }
    if (den == 0.0) throw DomainError("quotient of the zero function");
    return num / den;
}

} // namespace heatfk
