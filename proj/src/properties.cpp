#include <algorithm>
#include <cmath>
#include <limits>

#include "heatfk/bounds.hpp"
#include "heatfk/error.hpp"
#include "heatfk/scalars.hpp"
#include "heatfk/spectral.hpp"

namespace heatfk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double degree_for(const WeightedGraph& g, const BoundParams& p, Vertex x) {
    switch (p.profile) {
    case Profile::uniform: return 1.0;
    case Profile::counting: return g.deg(x);
    case Profile::general: return g.Deg(x);
    }
    return 1.0;
}

void require_range(bool ok, const std::string& what) {
    if (!ok) throw DomainError("grid outside definitional range: " + what);
}

const std::vector<Vertex>& targets(const PropertyGrid& grid) { return grid.ys.empty() ? grid.xs : grid.ys; }

void echo_params(PropertyReport& rep, const BoundParams& p) {
    rep.add_param("profile", to_string(p.profile));
    rep.add_param("measure", to_string(p.measure_kind));
    if (!p.a_table) rep.add_param("a", p.a);
    if (!p.n_table) rep.add_param("n", p.n);
    rep.add_param("R1", p.R1);
    rep.add_param("R2", p.R2);
    rep.add_param("S", p.S);
    rep.add_param("Lambda", p.Lambda);
    rep.add_param("C", p.C);
}

PropertyReport check_fk(const WeightedGraph& g, const IntrinsicMetric& metric, const HeatSemigroup& hs,
                        const BoundParams& p, const PropertyGrid& grid, const CheckOptions& opt) {
    PropertyReport rep;
    FkOptions fo;
    fo.cap = opt.cap;
    fo.exec = opt.exec;
    if (hs.mode().dirichlet) fo.host = hs.host();
    for (Vertex x : grid.xs)
        for (double r : grid.r) {
            require_range(r > 0 && r >= p.R1 && r <= p.R2, "FK needs r in [R1, R2], r > 0");
            const double a = p.a_at(x, r), n = p.n_at(x, r);
            std::vector<std::pair<std::string, double>> at{{"x", double(x)}, {"r", r}};
            const VertexSubset B = ball(metric, x, r);
            const VertexSubset ground = fo.host ? intersect(B, *fo.host) : B;
            if (ground.size() == g.size()) {
                // λ(B) = 0 while the right side is positive.
                rep.add_point(at, a, 0.0, true);
                continue;
            }
            if (ground.size() <= fo.cap) {
                auto est = fk_constant_exact(g, metric, x, r, n, fo);
                rep.add_point(at, a, est.a, true);
                continue;
            }
            const double lb = fk_monotone_lower_bound(g, ground, ball_volume(g, metric, x, r), r, n);
            if (lb >= a) {
                rep.add_point(at, a, lb, true);
            } else {
                auto est = fk_constant_heuristic(g, metric, x, r, n, fo);
                rep.add_point(at, a, est.a, false);
            }
        }
    return rep;
}

PropertyReport check_g(const WeightedGraph& g, const IntrinsicMetric& metric, const HeatSemigroup& hs,
                       const BoundParams& p, const PropertyGrid& grid) {
    PropertyReport rep;
    rep.log_constant = std::log(p.C);
    for (double t : grid.t) {
        require_range(t > 0 && t >= p.R1 * p.R1, "G needs t >= R1^2, t > 0");
        for (Vertex x : grid.xs)
            for (Vertex y : targets(grid)) {
                const double lhs = hs.log_kernel(t, x, y);
                const double rhs = log_gaussian_rhs(g, metric, p, x, y, t);
                rep.add_point_log({{"x", double(x)}, {"y", double(y)}, {"t", t}, {"rho", metric(x, y)}}, lhs, rhs);
            }
    }
    return rep;
}

PropertyReport check_vd(const WeightedGraph& g, const IntrinsicMetric& metric, const BoundParams& p,
                        const PropertyGrid& grid) {
    PropertyReport rep;
    rep.log_constant = std::log(p.C);
    std::vector<std::pair<double, double>> pairs;
    if (grid.R.empty()) {
        for (double r : grid.r)
            for (double R : grid.r)
                if (r <= R) pairs.emplace_back(r, R);
    } else {
        for (double r : grid.r)
            for (double R : grid.R)
                if (r <= R) pairs.emplace_back(r, R);
    }
    for (Vertex x : grid.xs)
        for (auto [r, R] : pairs) {
            require_range(r > 0 && r >= p.R1 && R <= p.R2, "VD needs R1 <= r <= R <= R2, r > 0");
            const double n = p.n_at(x, R);
            const double lhs = ball_volume(g, metric, x, R) / ball_volume(g, metric, x, r);
            const double rhs = p.C * Phi(g, p, x, r, R) * std::pow(R / r, n);
            rep.add_point({{"x", double(x)}, {"r", r}, {"R", R}}, lhs, rhs);
        }
    return rep;
}

PropertyReport check_l(const WeightedGraph& g, const IntrinsicMetric& metric, const BoundParams& p,
                       const PropertyGrid& grid) {
    PropertyReport rep;
    rep.log_constant = std::log(p.C);
    for (Vertex x : grid.xs)
        for (double r : grid.r) {
            require_range(r > 0 && r >= p.R1 && r <= p.R2, "L needs r in [R1, R2], r > 0");
            const double n = p.n_at(x, r);
            const double lhs = ball_volume(g, metric, x, r) / g.m(x);
            const double rhs = p.C * nu(g, p, x, n) * std::pow(r, n);
            rep.add_point({{"x", double(x)}, {"r", r}}, lhs, rhs);
        }
    return rep;
}

PropertyReport check_o(const WeightedGraph& g, const IntrinsicMetric& metric, const HeatSemigroup& hs,
                       const BoundParams& p, const PropertyGrid& grid) {
    PropertyReport rep;
    rep.log_constant = std::log(p.C);
    for (double t : grid.t) {
        require_range(t > 0 && t >= p.R1 * p.R1 && t <= p.R2 * p.R2, "O needs t in [R1^2, R2^2], t > 0");
        const double s = std::sqrt(t);
        for (Vertex x : grid.xs) {
            const double lhs = hs.log_kernel(t, x, x);
            const double rhs = std::log(p.C) + std::log(Psi(g, metric, p, x, x, std::min(t, p.R2 * p.R2))) -
                               std::log(ball_volume(g, metric, x, s));
            rep.add_point_log({{"x", double(x)}, {"t", t}}, lhs, rhs);
        }
    }
    return rep;
}

} // namespace

std::string to_string(Profile p) {
    switch (p) {
    case Profile::uniform: return "uniform";
    case Profile::counting: return "counting";
    case Profile::general: return "general";
    }
    return "uniform";
}

Profile profile_from_string(const std::string& name) {
    if (name == "uniform") return Profile::uniform;
    if (name == "counting") return Profile::counting;
    if (name == "general") return Profile::general;
    throw DomainError("unknown correction profile: " + name);
}

std::string to_string(PropertyKind k) {
    switch (k) {
    case PropertyKind::FK: return "FK";
    case PropertyKind::G: return "G";
    case PropertyKind::VD: return "VD";
    case PropertyKind::L: return "L";
    case PropertyKind::O: return "O";
    }
    return "FK";
}

PropertyKind property_from_string(const std::string& name) {
    if (name == "FK") return PropertyKind::FK;
    if (name == "G") return PropertyKind::G;
    if (name == "VD" || name == "V") return PropertyKind::VD;
    if (name == "L") return PropertyKind::L;
    if (name == "O") return PropertyKind::O;
    throw DomainError("unknown property: " + name);
}

BoundParams BoundParams::from(const WeightedGraph& g, const IntrinsicMetric& metric, const HeatSemigroup& hs) {
    BoundParams p;
    p.S = metric.jump_size();
    p.Lambda = hs.bottom();
    p.measure_kind = g.measure_kind();
    p.profile = g.measure_kind() == MeasureKind::normalizing ? Profile::uniform
                : g.measure_kind() == MeasureKind::counting  ? Profile::counting
                                                             : Profile::general;
    return p;
}

void BoundParams::validate() const {
    if (!(R1 <= R2)) throw DomainError("BoundParams needs R1 <= R2");
    if (!n_table && !(n > 0)) throw DomainError("BoundParams needs n > 0");
    if (!a_table && !(a > 0)) throw DomainError("BoundParams needs a > 0");
    if (!(S >= 0)) throw DomainError("BoundParams needs S >= 0");
    if (!(C > 0)) throw DomainError("BoundParams needs C > 0");
}

double nu(const WeightedGraph& g, const BoundParams& p, Vertex x, double n) {
    if (p.profile == Profile::uniform) return 1.0;
    return std::pow(std::max(1.0, degree_for(g, p, x)), 0.5 * n);
}

double Phi(const WeightedGraph& g, const BoundParams& p, Vertex x, double r, double R) {
    if (p.profile == Profile::uniform) return 1.0;
    const double nR = p.n_at(x, R);
    const double base = nu(g, p, x, nR);
    if (r < p.R1) {
        const double n1 = p.n_at(x, p.R1);
        return std::pow(base, theta(nR, p.R1, p.S)) * std::pow(p.R1, n1) * nu(g, p, x, n1);
    }
    return std::pow(base, theta(nR, r, p.S));
}

double Psi(const WeightedGraph& g, const IntrinsicMetric& metric, const BoundParams& p, Vertex x, Vertex y,
           double tau) {
    if (p.profile == Profile::uniform) return 1.0;
    const double s = std::sqrt(tau);
    const double sr = std::sqrt(tau_rho(tau, metric(x, y), p.S));
    return std::sqrt(Phi(g, p, x, sr, s) * Phi(g, p, y, sr, s));
}

Corrections corrections(const WeightedGraph& g, const IntrinsicMetric& metric, const BoundParams& p, Vertex x,
                        Vertex y, double tau) {
    const double s = std::sqrt(tau);
    Corrections c;
    c.nu = nu(g, p, x, p.n_at(x, s));
    c.Phi = Phi(g, p, x, s, s);
    c.Psi = Psi(g, metric, p, x, y, tau);
    return c;
}

double log_gaussian_rhs(const WeightedGraph& g, const IntrinsicMetric& metric, const BoundParams& p, Vertex x,
                        Vertex y, double t) {
    if (!(t > 0)) throw DomainError("gaussian_rhs needs t > 0");
    if (t < p.R1 * p.R1) throw DomainError("gaussian_rhs needs t >= R1^2");
    const double tau = std::min(t, p.R2 * p.R2);
    const double s = std::sqrt(tau);
    const double rho = metric(x, y);
    const double nxy = 0.5 * (p.n_at(x, s) + p.n_at(y, s));
    double v = std::log(p.C) + std::log(Psi(g, metric, p, x, y, tau));
    v += 0.5 * nxy * std::log(poly_correction(rho, t, p.S));
    v -= 0.5 * (std::log(ball_volume(g, metric, x, s)) + std::log(ball_volume(g, metric, y, s)));
    v -= p.Lambda * (t - tau) + zeta(rho, t, p.S);
    return v;
}

double gaussian_rhs(const WeightedGraph& g, const IntrinsicMetric& metric, const BoundParams& p, Vertex x, Vertex y,
                    double t) {
    return std::exp(log_gaussian_rhs(g, metric, p, x, y, t));
}

PropertyReport check_property(const WeightedGraph& g, const IntrinsicMetric& metric, const HeatSemigroup& hs,
                              PropertyKind which, const BoundParams& p, const PropertyGrid& grid,
                              const CheckOptions& opt) {
    p.validate();
    PropertyReport rep;
    switch (which) {
    case PropertyKind::FK: rep = check_fk(g, metric, hs, p, grid, opt); break;
    case PropertyKind::G: rep = check_g(g, metric, hs, p, grid); break;
    case PropertyKind::VD: rep = check_vd(g, metric, p, grid); break;
    case PropertyKind::L: rep = check_l(g, metric, p, grid); break;
    case PropertyKind::O: rep = check_o(g, metric, hs, p, grid); break;
    }
    rep.check = to_string(which);
    rep.tol = opt.tol;
    echo_params(rep, p);
    return rep;
}

DimensionPrime dimension_prime_profile(const BoundParams& p, double log_r, const DimensionProfile& prof) {
    if (log_r < std::max(1.0, 8.0 * p.R1)) throw DomainError("dimension_prime needs r >= e^{1 v 8 R1}");
    auto n_of = [&](double lr) { return prof.n_sup ? prof.n_sup(lr) : p.n; };
    auto C_of = [&](double lr) { return prof.C_sup ? prof.C_sup(lr) : p.C; };
    const double ln2 = std::log(2.0);

    DimensionPrime out;
    // ln A = 2^{19‖n‖} e ‖C‖ · 1∨‖deg‖^{ϑ}, with the sups taken out to radius A·r.
    auto next_log_A = [&](double log_A) {
        const double nA = n_of(log_A + log_r);
        const double th = vartheta_from_log(nA, log_r, p.S);
        const double degpow = std::max(0.0, th * prof.log_deg_inner(log_r));
        return std::exp(19.0 * nA * ln2 + 1.0 + std::log(C_of(log_A + log_r)) + degpow);
    };
    double log_A = next_log_A(0.0);
    out.iterations = 1;
    out.converged = false;
    for (std::size_t k = 0; k < 20; ++k) {
        const double nxt = next_log_A(log_A);
        ++out.iterations;
        const bool done = std::abs(nxt - log_A) <= 1e-6 * std::abs(log_A);
        log_A = nxt;
        if (done) {
            out.converged = true;
            break;
        }
    }
    const double log_Ar = log_A + log_r;
    const double nA = n_of(log_Ar);
    const double CA = C_of(log_Ar);
    const double expo = iota_from_log(nA, log_r) + vartheta_from_log(nA, log_r, p.S);
    const double inner = 2.0 * log_Ar + std::max(0.0, prof.log_deg_outer(log_Ar));
    out.log_A = log_A;
    out.n_prime = n_of(log_r) * std::max(1.0, expo * inner);
    out.log_a_prime = -(36.0 * ln2 + (26.0 / nA) * std::log(CA) + (2.0 / nA) * std::log(log_A) + 2.0 * log_A);
    return out;
}

DimensionPrime dimension_prime(const WeightedGraph& g, const IntrinsicMetric& metric, const BoundParams& p, Vertex o,
                               double r) {
    if (!(r > 0)) throw DomainError("dimension_prime needs r > 0");
    const double ecc = metric.eccentricity(o);
    const bool general = p.profile == Profile::general;
    auto check_radius = [&](double log_radius) {
        if (log_radius > std::log(ecc) + 1e-12)
            throw DomainError("A(r)*r exceeds the host radius: ln(radius) = " + std::to_string(log_radius) +
                              " > ln(eccentricity) = " + std::to_string(std::log(ecc)));
        return std::exp(log_radius);
    };
    auto sup_over = [&](double radius, bool use_Deg) {
        double s = 1.0;
        for (Vertex v : ball(metric, o, radius)) s = std::max(s, use_Deg ? g.Deg(v) : g.deg(v));
        return std::log(s);
    };
    DimensionProfile prof;
    prof.log_deg_inner = [&](double lr) { return sup_over(check_radius(lr), false); };
    prof.log_deg_outer = [&](double lr) { return sup_over(check_radius(lr), general); };
    if (p.n_table) {
        prof.n_sup = [&](double lr) {
            const double radius = check_radius(lr);
            double s = 0.0;
            for (Vertex v : ball(metric, o, radius)) {
                s = std::max(s, p.n_at(v, std::max(p.R1, 1e-300)));
                s = std::max(s, p.n_at(v, radius));
                for (double d : ball_radii(metric, v))
                    if (d >= p.R1 && d <= radius) s = std::max(s, p.n_at(v, d));
            }
            return s;
        };
    }
    return dimension_prime_profile(p, std::log(r), prof);
}

} // namespace heatfk
