#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "heatfk/graph.hpp"
#include "heatfk/heat.hpp"
#include "heatfk/metric.hpp"
#include "heatfk/report.hpp"

namespace heatfk {

// Which degree corrections decorate (G), (VD), (L): none (m = deg), deg_x for
// the counting measure, Deg_x with variable dimension for general measures.
enum class Profile { uniform, counting, general };

std::string to_string(Profile p);
Profile profile_from_string(const std::string& name);

struct BoundParams {
    double a = 1.0;
    double n = 1.0;
    // Optional tables (x, r) ↦ a_x(r), n_x(r) overriding the constants.
    std::function<double(Vertex, double)> a_table;
    std::function<double(Vertex, double)> n_table;
    double R1 = 0.0;
    double R2 = std::numeric_limits<double>::infinity();
    double S = 1.0;
    double Lambda = 0.0;
    MeasureKind measure_kind = MeasureKind::counting;
    Profile profile = Profile::uniform;
    // Constant in front of ν, Φ, Ψ.
    double C = 1.0;

    double a_at(Vertex x, double r) const { return a_table ? a_table(x, r) : a; }
    double n_at(Vertex x, double r) const { return n_table ? n_table(x, r) : n; }
    // S from the metric, Λ from the semigroup, measure kind from the graph.
    static BoundParams from(const WeightedGraph& g, const IntrinsicMetric& metric, const HeatSemigroup& hs);
    void validate() const;
};

// ν_{x,n} = [1∨deg_x]^{n/2} (counting) or [1∨Deg_x]^{n/2} (general); 1 for uniform.
double nu(const WeightedGraph& g, const BoundParams& p, Vertex x, double n);
// Φ_x^{n(R)}(r), without the constant C.
double Phi(const WeightedGraph& g, const BoundParams& p, Vertex x, double r, double R);
// Ψ_xy(√τ) with Ψ² = Φ_x^{n(√τ)}(√τ_ρ)Φ_y^{n(√τ)}(√τ_ρ), without C.
double Psi(const WeightedGraph& g, const IntrinsicMetric& metric, const BoundParams& p, Vertex x, Vertex y,
           double tau);

struct Corrections {
    double nu = 1.0;
    double Phi = 1.0;  // at r = √τ
    double Psi = 1.0;
};

Corrections corrections(const WeightedGraph& g, const IntrinsicMetric& metric, const BoundParams& p, Vertex x,
                        Vertex y, double tau);

// ln of the (G) right-hand side, including the constant C in front of Ψ.
double log_gaussian_rhs(const WeightedGraph& g, const IntrinsicMetric& metric, const BoundParams& p, Vertex x,
                        Vertex y, double t);
double gaussian_rhs(const WeightedGraph& g, const IntrinsicMetric& metric, const BoundParams& p, Vertex x, Vertex y,
                    double t);

enum class PropertyKind { FK, G, VD, L, O };

std::string to_string(PropertyKind k);
PropertyKind property_from_string(const std::string& name);

// Evaluation points. ys defaults to xs; for (VD) an empty R list means all
// pairs r ≤ R taken from the r list.
struct PropertyGrid {
    std::vector<Vertex> xs;
    std::vector<Vertex> ys;
    std::vector<double> t;
    std::vector<double> r;
    std::vector<double> R;
};

struct CheckOptions {
    double tol = 1e-9;
    std::size_t cap = 16;
    Exec exec = Exec::parallel;
};

PropertyReport check_property(const WeightedGraph& g, const IntrinsicMetric& metric, const HeatSemigroup& hs,
                              PropertyKind which, const BoundParams& p, const PropertyGrid& grid,
                              const CheckOptions& opt = {});

struct DimensionPrime {
    double n_prime = 0.0;
    double log_a_prime = 0.0;
    double log_A = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

// Sup-norm callbacks over balls and space-time cylinders, taking logarithms
// of radii so that A(r)·r never has to be formed.
struct DimensionProfile {
    // ln(1 ∨ ‖deg‖_{B_o(ρ)}) for the A(r) exponent.
    std::function<double(double log_radius)> log_deg_inner;
    // ln(1 ∨ ‖deg‖_{B_o(ρ)}) (‖Deg‖ for general measures) inside n′.
    std::function<double(double log_radius)> log_deg_outer;
    // ‖n‖ and ‖C‖ on Q(R, ρ); constants from BoundParams when unset.
    std::function<double(double log_radius)> n_sup;
    std::function<double(double log_radius)> C_sup;
};

// n′(r), a′(r), A(r) from ball sup-norms of the graph itself. Requires
// ln r ≥ 1∨8R₁; throws DomainError when B_o(A(r)r) reaches past the
// eccentricity of o.
DimensionPrime dimension_prime(const WeightedGraph& g, const IntrinsicMetric& metric, const BoundParams& p, Vertex o,
                               double r);
// Same formulas for a host described only by its sup-norm profile.
DimensionPrime dimension_prime_profile(const BoundParams& p, double log_r, const DimensionProfile& prof);

} // namespace heatfk
