#pragma once

#include <span>
#include <string>
#include <vector>

#include "heatfk/graph.hpp"
#include "heatfk/kernels.hpp"
#include "heatfk/matrix.hpp"

namespace heatfk {

enum class MetricRule { combinatorial, degree_path, custom };

std::string to_string(MetricRule rule);
MetricRule metric_rule_from_string(const std::string& name);

// Path metric with its all-pairs table. Arc lengths are stored aligned with
// the graph's adjacency lists.
class IntrinsicMetric {
public:
    // degree_path: w(x,y) = (Deg_x ∨ Deg_y)^{-1/2}; combinatorial: w ≡ 1.
    static IntrinsicMetric build(const WeightedGraph& g, MetricRule rule, Exec exec = Exec::parallel);
    // Path metric from caller-supplied edge lengths, indexed like g.edges().
    static IntrinsicMetric from_edge_lengths(const WeightedGraph& g, const std::vector<double>& lengths,
                                             Exec exec = Exec::parallel);

    std::size_t size() const { return dist_.rows(); }
    double operator()(Vertex x, Vertex y) const { return dist_(x, y); }
    const Matrix& table() const { return dist_; }
    double jump_size() const { return S_; }
    MetricRule rule() const { return rule_; }
    bool intrinsic() const { return intrinsic_; }
    double min_slack() const { return min_slack_; }
    double diameter() const;
    double eccentricity(Vertex x) const;
    double arc_length(Vertex x, std::size_t k) const { return arc_len_[x][k]; }

    // Vertices ordered by (distance from x, index); distances alongside.
    std::span<const Vertex> order_from(Vertex x) const;
    std::span<const double> sorted_from(Vertex x) const;

    // Same metric with every distance multiplied by eps > 0.
    IntrinsicMetric scaled(const WeightedGraph& g, double eps) const;

private:
    static IntrinsicMetric finish(const WeightedGraph& g, MetricRule rule,
                                  std::vector<std::vector<double>> arc_len, Exec exec);

    Matrix dist_;
    std::vector<std::vector<double>> arc_len_;
    std::vector<std::vector<Vertex>> order_;
    std::vector<std::vector<double>> sorted_;
    double S_ = 0.0;
    double min_slack_ = 0.0;
    bool intrinsic_ = false;
    MetricRule rule_ = MetricRule::degree_path;
};

// slack(x) = m(x) − Σ_y b(x,y)ρ(x,y)².
std::vector<double> check_intrinsic(const WeightedGraph& g, const IntrinsicMetric& metric);

VertexSubset ball(const IntrinsicMetric& metric, Vertex x, double r);
std::size_t ball_size(const IntrinsicMetric& metric, Vertex x, double r);
double ball_volume(const WeightedGraph& g, const IntrinsicMetric& metric, Vertex x, double r);
// Volume of the open ball {ρ(x,·) < r}.
double open_ball_volume(const WeightedGraph& g, const IntrinsicMetric& metric, Vertex x, double r);
// Distinct values of ρ(x,·), ascending; ball volumes jump exactly there.
std::vector<double> ball_radii(const IntrinsicMetric& metric, Vertex x);
// Largest triangle-inequality violation over all triples.
double triangle_violation(const IntrinsicMetric& metric);

// φ_{A,R} = (1 − ρ(·,A)/R)₊.
std::vector<double> cutoff(const IntrinsicMetric& metric, const VertexSubset& A, double R);
// |∇f|²(x) = (1/m(x)) Σ_y b(x,y)(f(x)−f(y))².
std::vector<double> gradient_sq(const WeightedGraph& g, std::span<const double> f);
double gradient_sup_sq(const WeightedGraph& g, std::span<const double> f);
// φ₀ = (r − S − ρ(o,·))₊.
std::vector<double> tent_function(const IntrinsicMetric& metric, Vertex o, double r, double S);
// Σ m|∇f|² / Σ m f², without the factor ½ of the Dirichlet form.
double gradient_quotient(const WeightedGraph& g, std::span<const double> f);

} // namespace heatfk
