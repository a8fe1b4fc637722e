#include "heatfk/heat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heatfk/error.hpp"
#include "heatfk/scalars.hpp"

namespace heatfk {

namespace {

VertexSubset host_of(const WeightedGraph& g, const SpectralMode& mode) {
    if (!mode.dirichlet) return VertexSubset::all(g.size());
    if (mode.host.empty()) throw DomainError("Dirichlet host must be nonempty");
    for (Vertex x : mode.host)
        if (x >= g.size()) throw DomainError("host vertex out of range");
    return mode.host;
}

void check_time(double t) {
    if (!(t >= 0) || !std::isfinite(t)) throw DomainError("heat semigroup needs finite t >= 0");
}

// ln Σ e^{a_i}, ignoring -inf entries.
double log_sum_exp(const std::vector<double>& a) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double v : a) mx = std::max(mx, v);
    if (!std::isfinite(mx)) return mx;
    double s = 0.0;
    for (double v : a) s += std::exp(v - mx);
    return mx + std::log(s);
}

// Above this q·t the series needs too many terms; the shifted spectral sum
// takes over.
constexpr double kSeriesLimit = 2e5;
constexpr double kKilledDecayLimit = 300.0;

} // namespace

HeatSemigroup::HeatSemigroup(const WeightedGraph& g, SpectralMode mode)
    : g_(&g), mode_(std::move(mode)), host_(host_of(g, mode_)), gen_(g, host_), lazy_(std::make_shared<Lazy>()) {}

double HeatSemigroup::bottom() const {
    if (!mode_.dirichlet) return 0.0;
    return spectrum().values.front();
}

const EigenDecomposition& HeatSemigroup::spectrum() const {
    std::call_once(lazy_->once, [this] { lazy_->spec = eigendecompose(dirichlet_form_matrix(*g_, host_)); });
    return lazy_->spec;
}

bool HeatSemigroup::prefer_spectral(double t) const {
    if (gen_.rate_bound() * t > kSeriesLimit) return true;
    // Deep killed decay: series iterates would underflow before the sum settles.
    return mode_.dirichlet && bottom() * t > kKilledDecayLimit;
}

double HeatSemigroup::kernel(double t, Vertex x, Vertex y) const {
    check_time(t);
    if (!in_host(x) || !in_host(y)) return 0.0;
    if (prefer_spectral(t)) return std::exp(log_kernel(t, x, y));
    const auto col = gen_.column(t, local(y));
    return col[local(x)] / g_->m(y);
}

std::vector<double> HeatSemigroup::kernel_column(double t, Vertex y) const {
    check_time(t);
    std::vector<double> out(g_->size(), 0.0);
    if (!in_host(y)) return out;
    if (prefer_spectral(t)) {
        for (Vertex x : host_) out[x] = std::exp(log_kernel(t, x, y));
        return out;
    }
    const auto col = gen_.column(t, local(y));
    for (std::size_t i = 0; i < host_.size(); ++i) out[host_[i]] = col[i] / g_->m(y);
    return out;
}

Matrix HeatSemigroup::kernel_matrix(double t, Exec exec) const {
    check_time(t);
    const std::size_t n = g_->size();
    Matrix out(n, n);
    if (prefer_spectral(t)) {
        for (Vertex x : host_)
            for (Vertex y : host_) out(x, y) = std::exp(log_kernel(t, x, y));
        return out;
    }
    const Matrix local_table = gen_.matrix(t, exec);
    for (std::size_t i = 0; i < host_.size(); ++i)
        for (std::size_t j = 0; j < host_.size(); ++j) out(host_[i], host_[j]) = local_table(i, j) / g_->m(host_[j]);
    return out;
}

double HeatSemigroup::kernel_spectral(double t, Vertex x, Vertex y) const {
    check_time(t);
    if (!in_host(x) || !in_host(y)) return 0.0;
    const auto& sp = spectrum();
    const std::size_t i = local(x), j = local(y);
    double s = 0.0;
    for (std::size_t k = 0; k < sp.values.size(); ++k)
        s += std::exp(-t * sp.values[k]) * sp.vectors(i, k) * sp.vectors(j, k);
    s /= std::sqrt(g_->m(x) * g_->m(y));
    if (s < 0) {
        if (s > -1e-13) {
            lazy_->clamped.fetch_add(1);
            return 0.0;
        }
        throw PrecisionError("spectral heat kernel below -1e-13");
    }
    return s;
}

double HeatSemigroup::log_kernel(double t, Vertex x, Vertex y) const {
    check_time(t);
    if (!in_host(x) || !in_host(y)) return -std::numeric_limits<double>::infinity();
    if (!prefer_spectral(t)) {
        const auto col = gen_.column(t, local(y));
        const double v = col[local(x)] / g_->m(y);
        if (v > 1e-250) return std::log(v);
    }
    // p_t = e^{−tμ₀} Σ_k e^{−t(μ_k−μ₀)} v_k(x)v_k(y) / √(m(x)m(y)).
    const auto& sp = spectrum();
    const std::size_t i = local(x), j = local(y);
    const double mu0 = sp.values.front();
    double s = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < sp.values.size(); ++k) {
        const double term = std::exp(-t * (sp.values[k] - mu0)) * sp.vectors(i, k) * sp.vectors(j, k);
        s += term;
        scale += std::abs(term);
    }
    if (!(s > 1e-10 * scale)) throw PrecisionError("heat kernel below spectral resolution");
    return -t * mu0 + std::log(s) - 0.5 * std::log(g_->m(x) * g_->m(y));
}

double HeatSemigroup::log_diagonal(double t, Vertex x) const {
    check_time(t);
    if (!in_host(x)) return -std::numeric_limits<double>::infinity();
    const auto& sp = spectrum();
    const std::size_t i = local(x);
    std::vector<double> terms(sp.values.size());
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const double v = sp.vectors(i, k);
        terms[k] = v == 0.0 ? -std::numeric_limits<double>::infinity() : -t * sp.values[k] + 2.0 * std::log(std::abs(v));
    }
    return log_sum_exp(terms) - std::log(g_->m(x));
}

std::vector<double> HeatSemigroup::evolve(double t, std::span<const double> f) const {
    check_time(t);
    if (f.size() != g_->size()) throw DomainError("function length does not match vertex count");
    const auto& sp = spectrum();
    const std::size_t k = host_.size();
    // Coefficients of M^{1/2} f in the eigenbasis.
    std::vector<double> c(k, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
        double s = 0.0;
        for (std::size_t i = 0; i < k; ++i) s += sp.vectors(i, a) * std::sqrt(g_->m(host_[i])) * f[host_[i]];
        c[a] = s * std::exp(-t * sp.values[a]);
    }
    std::vector<double> out(g_->size(), 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        double s = 0.0;
        for (std::size_t a = 0; a < k; ++a) s += sp.vectors(i, a) * c[a];
        out[host_[i]] = s / std::sqrt(g_->m(host_[i]));
    }
    return out;
}

std::vector<double> HeatSemigroup::propagate_positive(double t, std::span<const double> f) const {
    check_time(t);
    if (f.size() != g_->size()) throw DomainError("function length does not match vertex count");
    std::vector<double> loc(host_.size());
    for (std::size_t i = 0; i < host_.size(); ++i) loc[i] = f[host_[i]];
    const auto res = gen_.apply(t, loc);
    std::vector<double> out(g_->size(), 0.0);
    for (std::size_t i = 0; i < host_.size(); ++i) out[host_[i]] = res[i];
    return out;
}

double HeatSemigroup::integrated_square_norm(double T, Vertex y, const VertexSubset& Z) const {
    check_time(T);
    if (!in_host(y)) return 0.0;
    const auto& sp = spectrum();
    const std::size_t k = host_.size();
    const std::size_t j = local(y);
    Matrix G(k, k);
    for (Vertex z : Z) {
        if (!in_host(z)) continue;
        const std::size_t i = local(z);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) G(a, b) += sp.vectors(i, a) * sp.vectors(i, b);
    }
    double s = 0.0;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const double sigma = sp.values[a] + sp.values[b];
            const double weight = sigma > 1e-300 ? -std::expm1(-T * sigma) / sigma : T;
            s += sp.vectors(j, a) * sp.vectors(j, b) * G(a, b) * weight;
        }
    return std::max(0.0, s) / g_->m(y);
}

double heat_kernel(const HeatSemigroup& hs, double t, Vertex x, Vertex y) { return hs.kernel(t, x, y); }

std::vector<double> evolve(const HeatSemigroup& hs, double t, std::span<const double> f) { return hs.evolve(t, f); }

namespace {

double gershgorin_bound(const WeightedGraph& g) {
    double bound = 0.0;
    for (Vertex x = 0; x < g.size(); ++x) {
        double s = g.Deg(x);
        for (const auto& e : g.neighbors(x)) s += e.b / std::sqrt(g.m(x) * g.m(e.to));
        bound = std::max(bound, s);
    }
    return bound;
}

} // namespace

std::size_t ode_default_steps(const WeightedGraph& g, double t) {
    const double bound = gershgorin_bound(g);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(t * bound / 0.02)));
}

std::vector<double> ode_crosscheck(const WeightedGraph& g, double t, Vertex x, std::size_t steps) {
    check_time(t);
    if (x >= g.size()) throw DomainError("unknown vertex");
    std::vector<double> u(g.size(), 0.0);
    u[x] = 1.0 / g.m(x);
    if (t == 0.0) return u;
    if (steps == 0) throw DomainError("ode_crosscheck needs at least one step");
    const double dt = t / static_cast<double>(steps);
    if (dt * gershgorin_bound(g) > 0.1) throw DomainError("RK4 step too large for the spectrum");
    auto rhs = [&](const std::vector<double>& v) {
        auto d = apply_laplacian(g, v);
        for (auto& e : d) e = -e;
        return d;
    };
    std::vector<double> tmp(g.size());
    for (std::size_t s = 0; s < steps; ++s) {
        const auto k1 = rhs(u);
        for (std::size_t i = 0; i < u.size(); ++i) tmp[i] = u[i] + 0.5 * dt * k1[i];
        const auto k2 = rhs(tmp);
        for (std::size_t i = 0; i < u.size(); ++i) tmp[i] = u[i] + 0.5 * dt * k2[i];
        const auto k3 = rhs(tmp);
        for (std::size_t i = 0; i < u.size(); ++i) tmp[i] = u[i] + dt * k3[i];
        const auto k4 = rhs(tmp);
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
    return u;
}

double log_weighted_norm_E(const HeatSemigroup& hs, const IntrinsicMetric& metric, Vertex x, double t, double eta) {
    if (!(t > 0)) throw DomainError("E_eta needs t > 0");
    if (!(eta >= 0)) throw DomainError("E_eta needs eta >= 0");
    const auto& g = hs.graph();
    const double h = h_cosh(eta, metric.jump_size());
    const auto col = hs.kernel_column(t, x);
    std::vector<double> terms;
    terms.reserve(col.size());
    for (Vertex z = 0; z < g.size(); ++z) {
        if (col[z] <= 0) continue;
        terms.push_back(std::log(g.m(z)) + 2.0 * std::log(col[z]) + 2.0 * eta * metric(x, z) - 2.0 * t * h);
    }
    return log_sum_exp(terms);
}

double weighted_norm_E(const HeatSemigroup& hs, const IntrinsicMetric& metric, Vertex x, double t, double eta) {
    return std::exp(log_weighted_norm_E(hs, metric, x, t, eta));
}

std::vector<double> carre_du_champ(const WeightedGraph& g, std::span<const double> phi, std::span<const double> psi) {
    if (phi.size() != g.size() || psi.size() != g.size())
        throw DomainError("function length does not match vertex count");
    std::vector<double> out(g.size(), 0.0);
    for (Vertex x = 0; x < g.size(); ++x) {
        double s = 0.0;
        for (const auto& e : g.neighbors(x)) s += e.b * std::abs((phi[x] - phi[e.to]) * (psi[x] - psi[e.to]));
        out[x] = s / g.m(x);
    }
    return out;
}

std::vector<double> carre_du_champ_exp(const WeightedGraph& g, std::span<const double> omega) {
    if (omega.size() != g.size()) throw DomainError("function length does not match vertex count");
    std::vector<double> out(g.size(), 0.0);
    for (Vertex x = 0; x < g.size(); ++x) {
        double s = 0.0;
        for (const auto& e : g.neighbors(x)) s += e.b * 2.0 * (std::cosh(0.5 * (omega[x] - omega[e.to])) - 1.0);
        out[x] = s / g.m(x);
    }
    return out;
}

IdentityResiduals elementary_identities_check(const WeightedGraph& g, std::span<const double> u,
                                              std::span<const double> omega) {
    if (u.size() != g.size() || omega.size() != g.size())
        throw DomainError("function length does not match vertex count");
    auto scaled = [](double lhs, double rhs) {
        return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
    };
    IdentityResiduals r;
    r.slack_iii = std::numeric_limits<double>::infinity();
    for (Vertex x = 0; x < g.size(); ++x) {
        for (const auto& e : g.neighbors(x)) {
            const Vertex y = e.to;
            const double ehx = std::exp(omega[x] / 2), ehy = std::exp(omega[y] / 2);
            const double emx = std::exp(-omega[x] / 2), emy = std::exp(-omega[y] / 2);
            const double grad_eh = ehx - ehy;
            // (i)
            const double lhs1 = (u[x] - u[y]) * (u[x] * std::exp(omega[x]) - u[y] * std::exp(omega[y]));
            const double rhs1 = (u[x] * ehx - u[y] * ehy) * (u[x] * ehx - u[y] * ehy) - u[x] * u[y] * grad_eh * grad_eh;
            r.identity_i = std::max(r.identity_i, scaled(lhs1, rhs1));
            // (ii)
            const double prod = std::abs(grad_eh * (emx - emy));
            const double cosh_form = 2.0 * (std::cosh(0.5 * (omega[x] - omega[y])) - 1.0);
            const double exp_form = std::exp(-0.5 * (omega[x] + omega[y])) * grad_eh * grad_eh;
            r.identity_ii = std::max({r.identity_ii, scaled(prod, cosh_form), scaled(cosh_form, exp_form)});
            // (iii)
            const double lhs3 = u[x] * u[y] * grad_eh * grad_eh;
            const double rhs3 = 0.5 * u[x] * u[x] * std::exp(omega[x]) * prod + 0.5 * u[y] * u[y] * std::exp(omega[y]) * prod;
            r.slack_iii = std::min(r.slack_iii, (rhs3 - lhs3) / std::max({1.0, std::abs(lhs3), std::abs(rhs3)}));
        }
    }
    if (!std::isfinite(r.slack_iii)) r.slack_iii = 0.0;
    return r;
}

std::string to_string(OmegaKind kind) {
    switch (kind) {
    case OmegaKind::forward: return "forward";
    case OmegaKind::backward: return "backward";
    case OmegaKind::centered: return "centered";
    }
    return "centered";
}

double OmegaField::value(double t, Vertex x) const {
    const double d = (*metric)(o, x);
    const double rho0 = std::max(0.0, d - R);
    switch (kind) {
    case OmegaKind::forward: return -2.0 * eta * rho0 - 2.0 * (t - T) * h;
    case OmegaKind::backward: return 2.0 * eta * rho0 - 2.0 * t * h;
    case OmegaKind::centered: return 2.0 * eta * d - 2.0 * t * h;
    }
    return 0.0;
}

double OmegaField::time_derivative(double, Vertex) const { return -2.0 * h; }

std::vector<double> OmegaField::at(double t) const {
    std::vector<double> out(metric->size());
    for (Vertex x = 0; x < out.size(); ++x) out[x] = value(t, x);
    return out;
}

OmegaField make_omega(OmegaKind kind, Vertex o, double R, double T, double eta, const IntrinsicMetric& metric) {
    if (!(eta >= 0) || !(R >= 0) || !(T >= 0)) throw DomainError("omega needs eta, R, T >= 0");
    if (o >= metric.size()) throw DomainError("unknown center vertex");
    OmegaField w;
    w.kind = kind;
    w.o = o;
    w.R = R;
    w.T = T;
    w.eta = eta;
    w.h = metric.jump_size() > 0 ? h_cosh(eta, metric.jump_size()) : 0.0;
    w.metric = &metric;
    return w;
}

OmegaField broken_omega(const OmegaField& w) {
    OmegaField b = w;
    b.eta = 2.0 * w.eta;
    return b;
}

EikonalResult check_eikonal(const WeightedGraph& g, const OmegaField& w, const std::vector<double>& times) {
    EikonalResult res;
    res.min_margin = std::numeric_limits<double>::infinity();
    for (double t : times) {
        const auto om = w.at(t);
        const auto dg = carre_du_champ_exp(g, om);
        for (Vertex x = 0; x < g.size(); ++x) {
            const double margin = -w.time_derivative(t, x) - dg[x];
            if (margin < res.min_margin) {
                res.min_margin = margin;
                res.witness_x = x;
                res.witness_t = t;
            }
        }
    }
    if (!std::isfinite(res.min_margin)) res.min_margin = 0.0;
    return res;
}

EikonalResult check_eikonal(const WeightedGraph& g, const std::function<double(double, Vertex)>& field,
                            const std::vector<double>& times, double dt) {
    if (!(dt > 0)) throw DomainError("sampled eikonal check needs dt > 0");
    EikonalResult res;
    res.min_margin = std::numeric_limits<double>::infinity();
    for (double t : times) {
        std::vector<double> om(g.size());
        for (Vertex x = 0; x < g.size(); ++x) om[x] = field(t, x);
        const auto dg = carre_du_champ_exp(g, om);
        for (Vertex x = 0; x < g.size(); ++x) {
            const double dw = (field(t + dt, x) - field(t - dt, x)) / (2.0 * dt);
            const double margin = -dw - dg[x];
            if (margin < res.min_margin) {
                res.min_margin = margin;
                res.witness_x = x;
                res.witness_t = t;
            }
        }
    }
    if (!std::isfinite(res.min_margin)) res.min_margin = 0.0;
    return res;
}

XiResult xi_monitor(const HeatSemigroup& hs, const OmegaField& w, std::span<const double> u0, double Lambda,
                    const std::vector<double>& times, double tol) {
    const auto& g = hs.graph();
    if (u0.size() != g.size()) throw DomainError("function length does not match vertex count");
    std::vector<std::string> failed;
    for (double v : u0)
        if (v < 0) {
            failed.push_back("u0 >= 0");
            break;
        }
    const auto eik = check_eikonal(g, w, times);
    if (!eik.holds()) failed.push_back("eikonal inequality on the time grid");
    if (!failed.empty()) throw HypothesisError(failed);

    XiResult res;
    res.times = times;
    for (double t : times) {
        const auto u = hs.propagate_positive(t, u0);
        std::vector<double> terms;
        for (Vertex x = 0; x < g.size(); ++x)
            if (u[x] > 0) terms.push_back(std::log(g.m(x)) + 2.0 * std::log(u[x]) + w.value(t, x));
        res.log_xi.push_back(2.0 * Lambda * t + log_sum_exp(terms));
    }
    const double limit = std::log1p(tol);
    res.worst_log_ratio = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < res.log_xi.size(); ++k) {
        const double d = res.log_xi[k + 1] - res.log_xi[k];
        if (d > res.worst_log_ratio) {
            res.worst_log_ratio = d;
            res.worst_step = k;
        }
        if (d > limit) res.nonincreasing = false;
    }
    if (res.log_xi.size() < 2) res.worst_log_ratio = 0.0;
    return res;
}

SubsolutionResidual subsolution_residual(const WeightedGraph& g, const std::vector<std::vector<double>>& u,
                                         double dt) {
    if (u.size() < 3) throw DomainError("subsolution residual needs at least 3 time points");
    if (!(dt > 0)) throw DomainError("time step must be positive");
    SubsolutionResidual r;
    r.max_residual = -std::numeric_limits<double>::infinity();
    const std::size_t K = u.size();
    for (std::size_t k = 0; k < K; ++k) {
        if (u[k].size() != g.size()) throw DomainError("function length does not match vertex count");
        const auto lap = apply_laplacian(g, u[k]);
        for (Vertex x = 0; x < g.size(); ++x) {
            double du;
            if (k == 0)
                du = (-3.0 * u[0][x] + 4.0 * u[1][x] - u[2][x]) / (2.0 * dt);
            else if (k == K - 1)
                du = (3.0 * u[K - 1][x] - 4.0 * u[K - 2][x] + u[K - 3][x]) / (2.0 * dt);
            else
                du = (u[k + 1][x] - u[k - 1][x]) / (2.0 * dt);
            const double res = du + lap[x];
            r.max_residual = std::max(r.max_residual, res);
            r.max_abs = std::max(r.max_abs, std::abs(res));
        }
    }
    return r;
}

std::vector<double> geometric_grid(double lo, double hi, double ratio) {
    if (!(lo > 0) || !(hi >= lo) || !(ratio > 1)) throw DomainError("geometric grid needs 0 < lo <= hi, ratio > 1");
    std::vector<double> out;
    for (double t = lo; t < hi * (1 - 1e-12); t *= ratio) out.push_back(t);
    out.push_back(hi);
    return out;
}

} // namespace heatfk
