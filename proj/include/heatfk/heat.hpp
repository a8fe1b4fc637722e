#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "heatfk/eigen.hpp"
#include "heatfk/graph.hpp"
#include "heatfk/kernels.hpp"
#include "heatfk/metric.hpp"
#include "heatfk/spectral.hpp"

namespace heatfk {

// Heat semigroup of a finite graph, optionally killed outside a host set.
// Kernel entries come from the nonnegative uniformized series, which keeps
// relative accuracy in the far tail where weights like e^{2ηρ} amplify
// them. The eigendecomposition of M^{-1/2}(D−B)M^{-1/2} is built on first
// use and serves evolve() on signed data, spectral cross-checks and
// closed-form time integrals. The graph must outlive the semigroup.
class HeatSemigroup {
public:
    explicit HeatSemigroup(const WeightedGraph& g, SpectralMode mode = SpectralMode::full());

    const WeightedGraph& graph() const { return *g_; }
    const SpectralMode& mode() const { return mode_; }
    const VertexSubset& host() const { return host_; }
    bool in_host(Vertex x) const { return host_.contains(x); }
    // Λ: 0 in full mode, λ(H) in Dirichlet-host mode.
    double bottom() const;

    double kernel(double t, Vertex x, Vertex y) const;
    // p_t(·, y) over all vertices (zero outside the host).
    std::vector<double> kernel_column(double t, Vertex y) const;
    // Full table p_t(x, y).
    Matrix kernel_matrix(double t, Exec exec = Exec::parallel) const;
    // Σ_k e^{−tμ_k} v_k(x)v_k(y)/√(m(x)m(y)); values in (−1e-13, 0) are
    // clamped to 0 and counted, anything lower throws PrecisionError.
    double kernel_spectral(double t, Vertex x, Vertex y) const;
    // ln p_t(x,y), switching to the ground-state-shifted spectral sum when the
    // value underflows or q·t is too large for the series.
    double log_kernel(double t, Vertex x, Vertex y) const;

    // ln p_t(x,x) from Σ_k e^{−tμ_k} v_k(x)²/m(x), a sum of nonnegative terms.
    double log_diagonal(double t, Vertex x) const;

    std::vector<double> evolve(double t, std::span<const double> f) const;
    // Series evaluation of e^{−tΔ}f for f ≥ 0.
    std::vector<double> propagate_positive(double t, std::span<const double> f) const;

    // ∫_0^T Σ_{z∈Z} m(z) p_t(z,y)² dt in closed form.
    double integrated_square_norm(double T, Vertex y, const VertexSubset& Z) const;

    const EigenDecomposition& spectrum() const;
    std::size_t clamped_count() const { return lazy_->clamped.load(); }

private:
    struct Lazy {
        std::once_flag once;
        EigenDecomposition spec;
        std::atomic<std::size_t> clamped{0};
    };

    std::size_t local(Vertex x) const { return host_.position(x); }
    bool prefer_spectral(double t) const;

    const WeightedGraph* g_;
    SpectralMode mode_;
    VertexSubset host_;
    KilledGenerator gen_;
    std::shared_ptr<Lazy> lazy_;
};

double heat_kernel(const HeatSemigroup& hs, double t, Vertex x, Vertex y);
std::vector<double> evolve(const HeatSemigroup& hs, double t, std::span<const double> f);

// Smallest RK4 step count meeting t/steps · (Gershgorin bound) ≤ 0.02.
std::size_t ode_default_steps(const WeightedGraph& g, double t);
// Classical RK4 for du/dt = −Δu from u_0 = 1_x/m(x), i.e. the column p_t(·,x).
// Throws DomainError when t/steps times the Gershgorin bound exceeds 0.1.
std::vector<double> ode_crosscheck(const WeightedGraph& g, double t, Vertex x, std::size_t steps);

// E_η(x,t) = Σ_z m(z)p_t(x,z)² e^{2ηρ(x,z) − 2t·h(η)}.
double weighted_norm_E(const HeatSemigroup& hs, const IntrinsicMetric& metric, Vertex x, double t, double eta);
// ln E_η(x,t), for parameters where E itself leaves double range.
double log_weighted_norm_E(const HeatSemigroup& hs, const IntrinsicMetric& metric, Vertex x, double t, double eta);

// dΓ(φ,ψ)(x) = Σ_y (b(x,y)/m(x))|∇_{xy}φ ∇_{xy}ψ|.
std::vector<double> carre_du_champ(const WeightedGraph& g, std::span<const double> phi, std::span<const double> psi);
// dΓ(e^{ω/2}, e^{−ω/2}) through 2(cosh((ω(x)−ω(y))/2) − 1).
std::vector<double> carre_du_champ_exp(const WeightedGraph& g, std::span<const double> omega);

struct IdentityResiduals {
    double identity_i = 0.0;   // max scaled |lhs − rhs|
    double identity_ii = 0.0;  // both equalities of (ii)
    double slack_iii = 0.0;    // min scaled (rhs − lhs)
};

// Edge-wise identities for u, ω: residuals are |lhs − rhs| / max(1, |lhs|, |rhs|).
IdentityResiduals elementary_identities_check(const WeightedGraph& g, std::span<const double> u,
                                              std::span<const double> omega);

enum class OmegaKind { forward, backward, centered };

std::string to_string(OmegaKind kind);

// ω_t = −2ηρ₀ − 2(t−T)h, ω̃_t = 2ηρ₀ − 2th, ω̄_t = 2ηρ(o,·) − 2th with
// ρ₀ = (ρ(o,·) − R)₊ and h = h(η).
struct OmegaField {
    OmegaKind kind = OmegaKind::centered;
    Vertex o = 0;
    double R = 0.0;
    double T = 0.0;
    double eta = 0.0;
    double h = 0.0;
    const IntrinsicMetric* metric = nullptr;

    double value(double t, Vertex x) const;
    double time_derivative(double t, Vertex x) const;
    std::vector<double> at(double t) const;
};

OmegaField make_omega(OmegaKind kind, Vertex o, double R, double T, double eta, const IntrinsicMetric& metric);
// Negative control: rate doubled while h(η) stays at the old rate.
OmegaField broken_omega(const OmegaField& w);

struct EikonalResult {
    double min_margin = 0.0;
    Vertex witness_x = 0;
    double witness_t = 0.0;
    bool holds(double tol = 1e-12) const { return min_margin >= -tol; }
};

EikonalResult check_eikonal(const WeightedGraph& g, const OmegaField& w, const std::vector<double>& times);
// Sampled field ω(t, x); ∂_t by central differences with step dt.
EikonalResult check_eikonal(const WeightedGraph& g, const std::function<double(double, Vertex)>& field,
                            const std::vector<double>& times, double dt);

struct XiResult {
    std::vector<double> times;
    std::vector<double> log_xi;
    double worst_log_ratio = 0.0;  // max ln(Ξ_{k+1}/Ξ_k)
    std::size_t worst_step = 0;
    bool nonincreasing = true;
};

// Ξ(t) = e^{2Λt}‖u_t e^{ω_t/2}‖² on the grid. Throws HypothesisError when ω
// fails check_eikonal on the grid or u0 has a negative entry.
XiResult xi_monitor(const HeatSemigroup& hs, const OmegaField& w, std::span<const double> u0, double Lambda,
                    const std::vector<double>& times, double tol = 1e-9);

struct SubsolutionResidual {
    double max_residual = 0.0;  // max of (d/dt + Δ)u
    double max_abs = 0.0;
};

// u[k] is the solution at time t0 + k·dt. Second-order differences
// everywhere, one-sided at both ends.
SubsolutionResidual subsolution_residual(const WeightedGraph& g, const std::vector<std::vector<double>>& u, double dt);

std::vector<double> geometric_grid(double lo, double hi, double ratio = 1.2);

} // namespace heatfk
