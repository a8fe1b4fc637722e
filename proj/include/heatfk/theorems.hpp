#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "heatfk/graph.hpp"
#include "heatfk/heat.hpp"
#include "heatfk/kernels.hpp"
#include "heatfk/metric.hpp"
#include "heatfk/report.hpp"

namespace heatfk {

// Inputs shared by the theorem checkers; each checker reads the fields it
// needs. Empty vertex lists mean every host vertex (ys defaults to xs).
struct TheoremInputs {
    const WeightedGraph* g = nullptr;
    const IntrinsicMetric* metric = nullptr;
    const HeatSemigroup* hs = nullptr;

    std::vector<Vertex> xs;
    std::vector<Vertex> ys;
    std::vector<double> t;
    std::vector<double> r;
    std::vector<double> eta;
    std::vector<double> delta{1.0};

    double n = 1.0;
    double n_prime = 0.0;  // dimension of the concluded (FK); 0 means n
    double R = 0.0;
    double R1 = 0.0;
    double R2 = 0.0;
    double r_hat = 0.0;
    double r1 = 0.0;  // elementary estimates: outer and inner radius
    double r2 = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    double t0 = std::numeric_limits<double>::infinity();
    double C = 1.0;  // constant in O/V/L for the localized FK conclusion

    // Level pairs (b₁, b₂) as fractions of u_T(o).
    std::vector<std::pair<double, double>> levels{{0.1, 0.5}, {0.25, 0.75}, {0.5, 0.9}};
    std::size_t subsets = 200;
    std::size_t max_subset = 48;
    std::uint64_t seed = 1;
    std::size_t quad_panels = 64;

    double tol = 1e-9;
    std::size_t cap = 16;
    Exec exec = Exec::parallel;
};

PropertyReport check_mv(const TheoremInputs& in);
PropertyReport check_elementary_point(const TheoremInputs& in);
PropertyReport check_elementary_step(const TheoremInputs& in);
PropertyReport check_split(const TheoremInputs& in);
PropertyReport check_upper_general(const TheoremInputs& in);
PropertyReport check_gaussian_clean(const TheoremInputs& in);
PropertyReport check_kappa_bound(const TheoremInputs& in);
PropertyReport check_integrated_heat(const TheoremInputs& in);
PropertyReport check_ball_comparison(const TheoremInputs& in);
PropertyReport check_fk_apriori(const TheoremInputs& in);
PropertyReport check_reverse_doubling(const TheoremInputs& in);
PropertyReport check_choice_gamma(const TheoremInputs& in);
PropertyReport check_normalized_classical_fk(const TheoremInputs& in);
PropertyReport check_fk_localreg_clean(const TheoremInputs& in);
PropertyReport check_doubling_from_fk(const TheoremInputs& in);
PropertyReport check_localreg_from_fk(const TheoremInputs& in);
PropertyReport check_full_doubling(const TheoremInputs& in);

const std::vector<std::string>& theorem_names();
bool is_theorem(const std::string& name);
// Throws DomainError for unknown names and HypothesisError on failed audits.
PropertyReport theorem_check(const std::string& name, const TheoremInputs& in);

// sup over lo ≤ s ≤ R ≤ hi of m(B_x(R))/m(B_x(s))·(s/R)^n, attained at ball
// breakpoints or their left limits; lo = 0 means s ranges over (0, hi].
double volume_doubling_sup(const WeightedGraph& g, const IntrinsicMetric& metric, Vertex x, double lo, double hi,
                           double n);
// sup over s ∈ [lo, hi] of p_{s²}(x,x)·m(B_x(s)), attained at lo or at breakpoints.
double diagonal_sup(const HeatSemigroup& hs, const IntrinsicMetric& metric, Vertex x, double lo, double hi);

} // namespace heatfk
