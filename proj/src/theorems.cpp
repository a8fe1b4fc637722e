#include "heatfk/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "heatfk/error.hpp"
#include "heatfk/rng.hpp"
#include "heatfk/scalars.hpp"
#include "heatfk/spectral.hpp"

namespace heatfk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLn2 = std::log(2.0);

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// Bundle of the graph-side objects every checker needs.
struct Ctx {
    const WeightedGraph& g;
    const IntrinsicMetric& metric;
    const HeatSemigroup& hs;
    double S;
    double Lambda;
    FkOptions fo;

    explicit Ctx(const TheoremInputs& in)
        : g(deref(in.g, "graph")), metric(deref(in.metric, "metric")), hs(deref(in.hs, "heat semigroup")),
          S(metric.jump_size()), Lambda(hs.bottom()) {
        if (metric.size() != g.size() || &hs.graph() != &g)
            throw DomainError("theorem inputs refer to different graphs");
        fo.cap = in.cap;
        fo.exec = in.exec;
        if (hs.mode().dirichlet) fo.host = hs.host();
    }

    template <class T>
    static const T& deref(const T* p, const char* what) {
        if (!p) throw DomainError(std::string("theorem inputs lack a ") + what);
        return *p;
    }

    VertexSubset ground(Vertex x, double r) const {
        const VertexSubset B = ball(metric, x, r);
        return fo.host ? intersect(B, *fo.host) : B;
    }
    bool proper(const VertexSubset& U) const { return U.size() < g.size() && !U.empty(); }
};

std::vector<Vertex> centers(const Ctx& c, const std::vector<Vertex>& given) {
    if (!given.empty()) {
        for (Vertex v : given)
            if (v >= c.g.size()) throw DomainError("vertex index out of range");
        return given;
    }
    return c.hs.host().items();
}

std::vector<Vertex> targets(const Ctx& c, const TheoremInputs& in) {
    return in.ys.empty() ? centers(c, in.xs) : centers(c, in.ys);
}

PropertyReport start(const std::string& name, const TheoremInputs& in, const Ctx& c) {
    PropertyReport rep;
    rep.check = name;
    rep.tol = in.tol;
    rep.add_param("n", in.n);
    rep.add_param("S", c.S);
    rep.add_param("Lambda", c.Lambda);
    rep.add_param("mode", c.hs.mode().dirichlet ? std::string("dirichlet_host") : std::string("full"));
    return rep;
}

// Closed ball volumes of x at each distinct distance.
struct VolumeProfile {
    std::vector<double> radii;
    std::vector<double> closed;

    double at(double r) const {
        auto it = std::upper_bound(radii.begin(), radii.end(), r);
        if (it == radii.begin()) return 0.0;
        return closed[static_cast<std::size_t>(it - radii.begin()) - 1];
    }
    double open_at(double r) const {
        auto it = std::lower_bound(radii.begin(), radii.end(), r);
        if (it == radii.begin()) return 0.0;
        return closed[static_cast<std::size_t>(it - radii.begin()) - 1];
    }
};

VolumeProfile volume_profile(const WeightedGraph& g, const IntrinsicMetric& metric, Vertex x) {
    VolumeProfile p;
    const auto order = metric.order_from(x);
    const auto dist = metric.sorted_from(x);
    double acc = 0.0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        acc += g.m(order[k]);
        if (!p.radii.empty() && dist[k] == p.radii.back())
            p.closed.back() = acc;
        else {
            p.radii.push_back(dist[k]);
            p.closed.push_back(acc);
        }
    }
    return p;
}

double vd_sup(const VolumeProfile& p, double lo, double hi, double n) {
    std::vector<std::pair<double, double>> s_cand, R_cand;
    if (lo > 0) {
        s_cand.emplace_back(lo, p.at(lo));
        R_cand.emplace_back(lo, p.at(lo));
    }
    for (std::size_t k = 0; k < p.radii.size(); ++k) {
        const double d = p.radii[k];
        if (d <= 0 || d > hi) continue;
        if (d > lo) s_cand.emplace_back(d, p.open_at(d));
        if (d >= lo) R_cand.emplace_back(d, p.closed[k]);
    }
    double best = 1.0;
    for (auto [s, vs] : s_cand)
        for (auto [R, vR] : R_cand)
            if (R >= s && vs > 0) best = std::max(best, vR / vs * std::pow(s / R, n));
    return best;
}

double diag_sup(const HeatSemigroup& hs, const VolumeProfile& p, Vertex x, double lo, double hi) {
    double best = 0.0;
    auto eval = [&](double s, double vol) {
        if (s <= 0) return;
        best = std::max(best, std::exp(hs.log_diagonal(s * s, x) + std::log(vol)));
    };
    if (lo > 0) eval(lo, p.at(lo));
    for (std::size_t k = 0; k < p.radii.size(); ++k)
        if (p.radii[k] > lo && p.radii[k] <= hi) eval(p.radii[k], p.closed[k]);
    return best;
}

// ln E_η(x, τ) from a precomputed row p_τ(x, ·).
double log_E_from_row(const WeightedGraph& g, const IntrinsicMetric& metric, Vertex x, const Matrix& P, double tau,
                      double eta, double S) {
    const double shift = 2.0 * tau * h_cosh(eta, S);
    double mx = -kInf;
    std::vector<double> terms;
    terms.reserve(g.size());
    for (Vertex z = 0; z < g.size(); ++z) {
        const double p = P(x, z);
        if (p <= 0) continue;
        terms.push_back(std::log(g.m(z)) + 2.0 * std::log(p) + 2.0 * eta * metric(x, z));
        mx = std::max(mx, terms.back());
    }
    if (terms.empty()) return -kInf;
    double s = 0.0;
    for (double v : terms) s += std::exp(v - mx);
    return mx + std::log(s) - shift;
}

struct FkCache {
    const Ctx& c;
    std::map<std::pair<std::vector<Vertex>, double>, AbsoluteFk> memo;

    const AbsoluteFk& get(const VertexSubset& ground, double n) {
        auto key = std::make_pair(ground.items(), n);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, absolute_fk_exact(c.g, ground, n, c.fo)).first;
        return it->second;
    }
};

// Audits that the absolute (FK) near x can be certified by enumeration.
bool audit_absolute_fk(PropertyReport& rep, const Ctx& c, const VertexSubset& ground, const std::string& where) {
    const bool proper = c.proper(ground);
    const bool small = ground.size() <= c.fo.cap;
    rep.audit("exact FK certified on " + where, proper && small,
              proper ? (small ? "" : std::to_string(ground.size()) + " vertices above cap " + std::to_string(c.fo.cap))
                     : "ground set is the whole graph or empty");
    return proper && small;
}

// Certified ln of the relative FK constant at (x, r): exact when enumerable,
// else the monotone lower bound.
double certified_log_fk(const Ctx& c, Vertex x, double r, double n, bool& exact) {
    const VertexSubset ground = c.ground(x, r);
    if (!c.proper(ground)) {
        exact = true;
        return -kInf;
    }
    if (ground.size() <= c.fo.cap) {
        exact = true;
        return std::log(fk_constant_exact(c.g, c.metric, x, r, n, c.fo).a);
    }
    exact = false;
    return std::log(fk_monotone_lower_bound(c.g, ground, ball_volume(c.g, c.metric, x, r), r, n));
}

// Gauss-Legendre nodes on [-1, 1].
constexpr double kGLx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831, 0.9061798459386640};
constexpr double kGLw[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889, 0.4786286704993665,
                            0.2369268850561891};

// ∫_lo^hi Σ_{z∈Z} m(z)(u_s(z) − b)₊² ds for u_s = p_s(·, y).
double level_integral(const Ctx& c, Vertex y, const VertexSubset& Z, double b, double lo, double hi,
                      std::size_t panels) {
    if (hi <= lo) return 0.0;
    std::vector<double> f(c.g.size(), 0.0);
    f[y] = 1.0 / c.g.m(y);
    const double h = (hi - lo) / static_cast<double>(panels);
    double total = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double a = lo + h * static_cast<double>(p);
        for (int k = 0; k < 5; ++k) {
            const double s = a + 0.5 * h * (kGLx[k] + 1.0);
            const auto u = c.hs.evolve(s, f);
            double acc = 0.0;
            for (Vertex z : Z) {
                const double d = u[z] - b;
                if (d > 0) acc += c.g.m(z) * d * d;
            }
            total += 0.5 * h * kGLw[k] * acc;
        }
    }
    return total;
}

double log1v(double v) { return std::log(std::max(1.0, v)); }

std::vector<double> breakpoints_between(const IntrinsicMetric& metric, Vertex x, double lo, double hi) {
    std::vector<double> out{lo};
    for (double d : ball_radii(metric, x))
        if (d > lo && d < hi) out.push_back(d);
    if (hi > lo) out.push_back(hi);
    return out;
}

} // namespace

double volume_doubling_sup(const WeightedGraph& g, const IntrinsicMetric& metric, Vertex x, double lo, double hi,
                           double n) {
    return vd_sup(volume_profile(g, metric, x), lo, hi, n);
}

double diagonal_sup(const HeatSemigroup& hs, const IntrinsicMetric& metric, Vertex x, double lo, double hi) {
    return diag_sup(hs, volume_profile(hs.graph(), metric, x), x, lo, hi);
}

PropertyReport check_split(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("split", in, c);
    rep.add_param("t0", in.t0);
    rep.audit("S > 0", c.S > 0, "S = " + num(c.S));
    rep.audit("t0 > 0", in.t0 > 0);
    rep.audit("nonempty t grid", !in.t.empty());
    for (double t : in.t) rep.audit("t > 0", t > 0, "t = " + num(t));
    rep.require_audit();
    const auto xs = centers(c, in.xs);
    const auto ys = targets(c, in);
    const bool same = xs == ys;
    for (double t : in.t) {
        const double tau0 = std::min(t, in.t0);
        const Matrix P = c.hs.kernel_matrix(0.5 * tau0, in.exec);
        for (Vertex x : xs)
            for (Vertex y : ys) {
                if (same && y < x) continue;
                const double rho = c.metric(x, y);
                const double eta0 = eta_opt(rho, t, c.S);
                const double lhs = c.hs.log_kernel(t, x, y);
                const double rhs = 0.5 * (log_E_from_row(c.g, c.metric, x, P, 0.5 * tau0, eta0, c.S) +
                                          log_E_from_row(c.g, c.metric, y, P, 0.5 * tau0, eta0, c.S)) -
                                   c.Lambda * (t - tau0) - zeta(rho, t, c.S);
                rep.add_point_log({{"x", double(x)}, {"y", double(y)}, {"t", t}, {"rho", rho}}, lhs, rhs);
            }
    }
    return rep;
}

PropertyReport check_kappa_bound(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("kappa_bound", in, c);
    rep.audit("nonempty T, R and eta grids", !in.t.empty() && !in.r.empty() && !in.eta.empty());
    for (double T : in.t) rep.audit("T >= 0", T >= 0, "T = " + num(T));
    for (double R : in.r) rep.audit("R >= 0", R >= 0, "R = " + num(R));
    for (double e : in.eta) rep.audit("eta >= 0", e >= 0, "eta = " + num(e));
    rep.require_audit();
    for (Vertex o : centers(c, in.xs))
        for (double T : in.t) {
            const auto col = c.hs.kernel_column(T, o);
            for (double R : in.r)
                for (double eta : in.eta) {
                    std::vector<double> terms;
                    double mx = -kInf;
                    for (Vertex z = 0; z < c.g.size(); ++z) {
                        if (col[z] <= 0) continue;
                        const double rho0 = std::max(0.0, c.metric(o, z) - R);
                        terms.push_back(std::log(c.g.m(z)) + 2.0 * std::log(col[z]) + 2.0 * eta * rho0);
                        mx = std::max(mx, terms.back());
                    }
                    double s = 0.0;
                    for (double v : terms) s += std::exp(v - mx);
                    const double lhs = mx + std::log(s) - 2.0 * T * h_cosh(eta, c.S);
                    rep.add_point_log({{"o", double(o)}, {"R", R}, {"T", T}, {"eta", eta}}, lhs, -std::log(c.g.m(o)));
                }
        }
    return rep;
}

PropertyReport check_mv(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("mv", in, c);
    const double R = in.R, n = in.n;
    rep.add_param("R", R);
    rep.audit("n > 0", n > 0);
    rep.audit("R >= 288 S", R >= 288.0 * c.S, "R = " + num(R) + ", 288 S = " + num(288.0 * c.S));
    rep.audit("nonempty T grid", !in.t.empty());
    for (double T : in.t) rep.audit("T > 0", T > 0, "T = " + num(T));
    const auto xs = centers(c, in.xs);
    for (Vertex x : xs) {
        rep.audit("x in host", c.hs.in_host(x), "x = " + std::to_string(x));
        audit_absolute_fk(rep, c, c.ground(x, R), "B_x(R) for x = " + std::to_string(x));
    }
    rep.require_audit();
    FkCache cache{c, {}};
    const double logC = log_mv_constant(n, c.S);
    rep.log_constant = logC;
    const double th = theta(n, R, c.S);
    for (Vertex x : xs) {
        const auto& fk = cache.get(c.ground(x, R), n);
        rep.audit("FK constant positive for x = " + std::to_string(x), fk.a > 0, "a = " + num(fk.a));
        rep.require_audit();
        const VertexSubset Bx = ball(c.metric, x, R);
        const double corr = th * log1v(std::pow(fk.a, 0.5 * n) / c.g.m(x));
        for (Vertex y : targets(c, in))
            for (double T : in.t) {
                const double lhs = 2.0 * c.hs.log_kernel(T, x, y);
                const double integral = c.hs.integrated_square_norm(T, y, Bx);
                const double rhs = logC + corr - 0.5 * n * std::log(fk.a) -
                                   (0.5 * n + 1.0) * std::log(std::min(T, R * R)) + std::log(integral);
                rep.add_point_log({{"x", double(x)}, {"y", double(y)}, {"T", T}, {"a", fk.a}}, lhs, rhs);
            }
    }
    return rep;
}

PropertyReport check_elementary_point(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("elementary_point", in, c);
    rep.add_param("r1", in.r1);
    rep.add_param("r2", in.r2);
    rep.add_param("t1", in.t1);
    rep.audit("0 < r2 < r1", in.r2 > 0 && in.r2 < in.r1);
    rep.audit("r1 - r2 > S", in.r1 - in.r2 > c.S, "r1 - r2 = " + num(in.r1 - in.r2) + ", S = " + num(c.S));
    rep.audit("nonempty T grid", !in.t.empty());
    for (double T : in.t) rep.audit("0 < t1 < T", in.t1 > 0 && in.t1 < T, "T = " + num(T));
    for (auto [b1, b2] : in.levels) rep.audit("0 < b1 < b2", b1 > 0 && b1 < b2);
    rep.require_audit();
    const double logC = 8.0 * kLn2;
    rep.log_constant = logC;
    for (Vertex o : centers(c, in.xs)) {
        const VertexSubset B1 = ball(c.metric, o, in.r1);
        for (Vertex y : in.ys.empty() ? std::vector<Vertex>{o} : targets(c, in))
            for (double T : in.t) {
                const double uT = c.hs.kernel(T, o, y);
                if (!(uT > 0)) continue;
                for (auto [f1, f2] : in.levels) {
                    const double b1 = f1 * uT, b2 = f2 * uT;
                    const double d = std::max(0.0, uT - b2);
                    const double lhs = c.g.m(o) * d * d;
                    const double a1 = level_integral(c, y, B1, b1, in.t1, T, in.quad_panels);
                    const double gap = in.r1 - in.r2 - c.S;
                    const double rhs = std::exp(logC) * (1.0 / (T - in.t1) + 1.0 / (gap * gap)) * a1;
                    rep.add_point({{"o", double(o)}, {"y", double(y)}, {"T", T}, {"b1", b1}, {"b2", b2}}, lhs, rhs);
                }
            }
    }
    return rep;
}

PropertyReport check_elementary_step(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("elementary_step", in, c);
    const double n = in.n;
    rep.add_param("r1", in.r1);
    rep.add_param("r2", in.r2);
    rep.add_param("t1", in.t1);
    rep.add_param("t2", in.t2);
    rep.audit("n > 0", n > 0);
    rep.audit("0 < r2 < r1", in.r2 > 0 && in.r2 < in.r1);
    rep.audit("r1 - r2 > 4 S", in.r1 - in.r2 > 4.0 * c.S,
              "r1 - r2 = " + num(in.r1 - in.r2) + ", 4 S = " + num(4.0 * c.S));
    rep.audit("nonempty T grid", !in.t.empty());
    for (double T : in.t) rep.audit("0 < t1 < t2 <= T", in.t1 > 0 && in.t1 < in.t2 && in.t2 <= T, "T = " + num(T));
    for (auto [b1, b2] : in.levels) rep.audit("0 < b1 < b2", b1 > 0 && b1 < b2);
    const auto os = centers(c, in.xs);
    for (Vertex o : os) audit_absolute_fk(rep, c, c.ground(o, in.r1), "B_o(r1) for o = " + std::to_string(o));
    rep.require_audit();
    FkCache cache{c, {}};
    const double gap = in.r1 - in.r2 - 4.0 * c.S;
    const double geo = std::log(1.0 / (in.t2 - in.t1) + 1.0 / (gap * gap));
    for (Vertex o : os) {
        const double a = cache.get(c.ground(o, in.r1), n).a;
        rep.audit("FK constant positive for o = " + std::to_string(o), a > 0, "a = " + num(a));
        rep.require_audit();
        const VertexSubset B1 = ball(c.metric, o, in.r1), B2 = ball(c.metric, o, in.r2);
        for (Vertex y : in.ys.empty() ? std::vector<Vertex>{o} : targets(c, in))
            for (double T : in.t) {
                const double uT = c.hs.kernel(T, o, y);
                if (!(uT > 0)) continue;
                for (auto [f1, f2] : in.levels) {
                    const double b1 = f1 * uT, b2 = f2 * uT;
                    const double a1 = level_integral(c, y, B1, b1, in.t1, T, in.quad_panels);
                    const double a2 = level_integral(c, y, B2, b2, in.t2, T, in.quad_panels);
                    const double lhs = a2 > 0 ? std::log(a2) : -kInf;
                    const double rhs = a1 > 0 ? (28.0 / n) * kLn2 - std::log(a) - (4.0 / n) * std::log(b2 - b1) +
                                                    (1.0 + 2.0 / n) * (geo + std::log(a1))
                                              : -kInf;
                    rep.add_point_log({{"o", double(o)}, {"y", double(y)}, {"T", T}, {"b1", b1}, {"b2", b2}, {"a", a}},
                                      lhs, rhs);
                }
            }
    }
    return rep;
}

PropertyReport check_integrated_heat(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("integrated_heat", in, c);
    const double R = in.R, n = in.n;
    rep.add_param("R", R);
    rep.audit("n > 0", n > 0);
    rep.audit("R >= 288 S", R >= 288.0 * c.S, "R = " + num(R) + ", 288 S = " + num(288.0 * c.S));
    rep.audit("nonempty T, eta and delta grids", !in.t.empty() && !in.eta.empty() && !in.delta.empty());
    for (double T : in.t) rep.audit("T > 0", T > 0, "T = " + num(T));
    for (double e : in.eta) rep.audit("eta > 0", e > 0, "eta = " + num(e));
    for (double d : in.delta) rep.audit("delta in (0, 1]", d > 0 && d <= 1, "delta = " + num(d));
    const auto os = centers(c, in.xs);
    for (Vertex o : os) audit_absolute_fk(rep, c, c.ground(o, R), "B_o(R) for o = " + std::to_string(o));
    rep.require_audit();
    FkCache cache{c, {}};
    const double logC = log_integrated_heat_constant(n, c.S);
    rep.log_constant = logC;
    for (Vertex o : os) {
        const double a = cache.get(c.ground(o, R), n).a;
        rep.audit("FK constant positive for o = " + std::to_string(o), a > 0, "a = " + num(a));
        rep.require_audit();
        const double base = log1v(std::pow(a, 0.5 * n) / c.g.m(o));
        for (double T : in.t) {
            const Matrix P = c.hs.kernel_matrix(T, in.exec);
            const double tau = std::min(T, R * R);
            for (double eta : in.eta) {
                const double lhs = log_E_from_row(c.g, c.metric, o, P, T, eta, c.S);
                for (double delta : in.delta) {
                    const double s = std::sqrt(delta * tau);
                    const double rhs = logC + 2.0 * eta * s + theta(n, s, c.S) * base - 0.5 * n * std::log(a * delta * tau);
                    rep.add_point_log({{"o", double(o)}, {"T", T}, {"eta", eta}, {"delta", delta}, {"a", a}}, lhs, rhs);
                }
            }
        }
    }
    return rep;
}

PropertyReport check_upper_general(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("upper_general", in, c);
    const double R2 = in.R2, n = in.n;
    rep.add_param("R2", R2);
    rep.audit("n > 0", n > 0);
    rep.audit("R2 >= 2 * 288 S", R2 >= 576.0 * c.S, "R2 = " + num(R2) + ", 576 S = " + num(576.0 * c.S));
    rep.audit("nonempty t grid", !in.t.empty());
    const double tmin = 2.0 * (288.0 * c.S) * (288.0 * c.S);
    for (double t : in.t) rep.audit("t >= 2 (288 S)^2", t >= tmin && t > 0, "t = " + num(t) + ", bound = " + num(tmin));
    const auto xs = centers(c, in.xs);
    const auto ys = targets(c, in);
    std::vector<Vertex> zs = xs;
    zs.insert(zs.end(), ys.begin(), ys.end());
    for (double t : in.t)
        for (Vertex z : zs) {
            rep.audit("z in host", c.hs.in_host(z), "z = " + std::to_string(z));
            audit_absolute_fk(rep, c, c.ground(z, std::min(std::sqrt(t), R2)),
                              "B_z(sqrt t ^ R2) for z = " + std::to_string(z) + ", t = " + num(t));
        }
    rep.require_audit();
    FkCache cache{c, {}};
    const double logCg = log_gamma_constant(n, c.S);
    rep.log_constant = 2.0 * logCg;
    for (double t : in.t) {
        const double tau = std::min(t, R2 * R2);
        const double s = std::min(std::sqrt(t), R2);
        for (Vertex x : xs)
            for (Vertex y : ys) {
                const double ax = cache.get(c.ground(x, s), n).a;
                const double ay = cache.get(c.ground(y, s), n).a;
                if (!(ax > 0) || !(ay > 0)) {
                    rep.audit("FK constants positive", false, "x = " + std::to_string(x) + ", y = " + std::to_string(y));
                    rep.require_audit();
                }
                const double rho = c.metric(x, y);
                const double th = theta(n, std::sqrt(tau_rho(tau, rho, c.S)), c.S);
                const double gx = logCg + 0.5 * th * log1v(std::pow(ax, 0.5 * n) / c.g.m(x));
                const double gy = logCg + 0.5 * th * log1v(std::pow(ay, 0.5 * n) / c.g.m(y));
                const double rhs = gx + gy +
                                   0.5 * n * (std::log(poly_correction(rho, t, c.S)) - 0.5 * std::log(ax * ay) - std::log(tau)) -
                                   c.Lambda * (t - tau) - zeta(rho, t, c.S);
                const double lhs = c.hs.log_kernel(t, x, y);
                rep.add_point_log({{"x", double(x)}, {"y", double(y)}, {"t", t}, {"rho", rho}}, lhs, rhs);
            }
    }
    return rep;
}

PropertyReport check_gaussian_clean(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("gaussian_clean", in, c);
    const double R1 = in.R1, R2 = in.R2, n = in.n;
    rep.add_param("R1", R1);
    rep.add_param("R2", R2);
    rep.audit("n > 0", n > 0);
    rep.audit("R2 >= 2 R1", R2 >= 2.0 * R1);
    rep.audit("2 R1 >= 2 * 288 S", 2.0 * R1 >= 576.0 * c.S, "R1 = " + num(R1) + ", 288 S = " + num(288.0 * c.S));
    if (c.g.measure_kind() == MeasureKind::normalizing)
        rep.audit("2 R1 >= 600 for the normalizing measure", 2.0 * R1 >= 600.0, "R1 = " + num(R1));
    rep.audit("nonempty t grid", !in.t.empty());
    for (double t : in.t) rep.audit("t >= R1^2", t >= R1 * R1 && t > 0, "t = " + num(t));
    const auto xs = centers(c, in.xs);
    const auto ys = targets(c, in);
    std::vector<Vertex> zs = xs;
    zs.insert(zs.end(), ys.begin(), ys.end());
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    // a_z = 1 ∧ min over the radii in [R1, R2] where the ball changes.
    std::map<Vertex, double> a_of;
    for (Vertex z : zs) {
        rep.audit("z in host", c.hs.in_host(z), "z = " + std::to_string(z));
        double a = 1.0;
        bool ok = true;
        for (double r : breakpoints_between(c.metric, z, R1, R2)) {
            const VertexSubset gr = c.ground(z, r);
            if (!c.proper(gr) || gr.size() > c.fo.cap) {
                ok = false;
                break;
            }
            a = std::min(a, fk_constant_exact(c.g, c.metric, z, r, n, c.fo).a);
        }
        rep.audit("exact relative FK(R1, R2, a, n) certified at z = " + std::to_string(z), ok && a > 0);
        a_of[z] = a;
    }
    rep.require_audit();
    const double logCg = log_gamma_constant(n, c.S);
    for (double t : in.t) {
        const double tau = std::min(t, R2 * R2);
        const double s = std::sqrt(tau);
        for (Vertex x : xs)
            for (Vertex y : ys) {
                const double rho = c.metric(x, y);
                const double ax = a_of[x], ay = a_of[y];
                const double logC = 2.0 * (n * kLn2 + logCg) - 0.25 * n * std::log(ax * ay);
                const double th = theta(n, std::sqrt(tau_rho(tau, rho, c.S)), c.S);
                const double logPsi = 0.5 * th * 0.5 * n * (log1v(c.g.Deg(x)) + log1v(c.g.Deg(y)));
                const double rhs = logC + logPsi + 0.5 * n * std::log(poly_correction(rho, t, c.S)) -
                                   0.5 * (std::log(ball_volume(c.g, c.metric, x, s)) +
                                          std::log(ball_volume(c.g, c.metric, y, s))) -
                                   c.Lambda * (t - tau) - zeta(rho, t, c.S);
                const double lhs = c.hs.log_kernel(t, x, y);
                rep.add_point_log({{"x", double(x)}, {"y", double(y)}, {"t", t}, {"rho", rho}, {"log_C", logC}}, lhs,
                                  rhs);
            }
    }
    return rep;
}

PropertyReport check_ball_comparison(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("ball_comparison", in, c);
    const double n = in.n;
    rep.audit("n > 0", n > 0);
    rep.audit("nonempty r grid", !in.r.empty());
    for (double r : in.r) rep.audit("r >= 8 S", r >= 8.0 * c.S, "r = " + num(r) + ", 8 S = " + num(8.0 * c.S));
    rep.require_audit();
    for (Vertex o : centers(c, in.xs))
        for (double r : in.r) {
            const VertexSubset B = ball(c.metric, o, r);
            double Phi = 1.0;
            std::vector<double> vol(B.size());
            for (std::size_t i = 0; i < B.size(); ++i) {
                const auto prof = volume_profile(c.g, c.metric, B[i]);
                Phi = std::max(Phi, vd_sup(prof, 0.25 * r, r, n));
                vol[i] = prof.at(r);
            }
            const std::size_t ymin = static_cast<std::size_t>(std::min_element(vol.begin(), vol.end()) - vol.begin());
            const double logK = 18.0 * n * kLn2 + 9.0 * std::log(Phi);
            for (std::size_t i = 0; i < B.size(); ++i)
                rep.add_point_log({{"o", double(o)}, {"r", r}, {"x", double(B[i])}, {"y", double(B[ymin])}, {"Phi", Phi}},
                                  std::log(vol[i]), logK + std::log(vol[ymin]));
        }
    return rep;
}

PropertyReport check_fk_apriori(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("fk_apriori", in, c);
    const double n = in.n, rh = in.r_hat;
    rep.add_param("r_hat", rh);
    rep.add_param("subsets", double(in.subsets));
    rep.audit("n > 0", n > 0);
    rep.audit("nonempty r grid", !in.r.empty());
    for (double r : in.r) {
        rep.audit("0 <= r_hat <= r", rh >= 0 && rh <= r, "r = " + num(r));
        rep.audit("r >= 8 S", r >= 8.0 * c.S, "r = " + num(r));
    }
    rep.require_audit();
    Lcg64 rng(in.seed);
    for (Vertex o : centers(c, in.xs))
        for (double r : in.r) {
            const VertexSubset B = ball(c.metric, o, r);
            const double lo = std::min(rh, 0.25 * r);
            double Phi = 1.0, Psi = 1.0;
            for (Vertex x : B) {
                const auto prof = volume_profile(c.g, c.metric, x);
                Phi = std::max(Phi, vd_sup(prof, lo, r, n));
                Psi = std::max(Psi, diag_sup(c.hs, prof, x, rh, r));
            }
            const double logK = std::log(ball_volume(c.g, c.metric, o, r)) - 18.0 * n * kLn2 - 10.0 * std::log(Phi) -
                                std::log(Psi) - n * std::log(r);
            const VertexSubset ground = c.ground(o, r);
            std::vector<Vertex> pool = ground.items();
            const std::size_t kmax = std::min(in.max_subset, pool.size());
            for (std::size_t s = 0; s < in.subsets && kmax > 0; ++s) {
                const std::size_t k = 1 + static_cast<std::size_t>(rng.below(kmax));
                for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
                const VertexSubset U = VertexSubset::from_unsorted({pool.begin(), pool.begin() + long(k)});
                if (!c.proper(U)) continue;
                double mU = 0.0;
                for (Vertex v : U) mU += c.g.m(v);
                // f(t) = (c + (n/2) ln t)/t peaks at ln t = 1 − 2c/n.
                const double cc = logK - std::log(mU);
                const double t_lo = std::max(rh * rh, 1e-300), t_hi = r * r;
                const double ts = std::clamp(std::exp(std::min(700.0, 1.0 - 2.0 * cc / n)), t_lo, t_hi);
                const double bound = (cc + 0.5 * n * std::log(ts)) / ts;
                const double lam = dirichlet_lambda(c.g, U);
                rep.add_point({{"o", double(o)}, {"r", r}, {"size", double(k)}, {"Phi", Phi}, {"Psi", Psi}}, bound, lam);
            }
        }
    return rep;
}

PropertyReport check_reverse_doubling(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("reverse_doubling", in, c);
    const double n = in.n, rh = in.r_hat, diam = c.metric.diameter();
    rep.add_param("r_hat", rh);
    rep.audit("n > 0", n > 0);
    rep.audit("nonempty r grid", !in.r.empty());
    rep.audit("32 S <= 8 r_hat", 32.0 * c.S <= 8.0 * rh, "S = " + num(c.S) + ", r_hat = " + num(rh));
    for (double r : in.r) {
        rep.audit("8 r_hat <= r", 8.0 * rh <= r, "r = " + num(r));
        rep.audit("r <= diam / 2", r <= 0.5 * diam, "r = " + num(r) + ", diam = " + num(diam));
    }
    rep.require_audit();
    for (Vertex o : centers(c, in.xs))
        for (double r : in.r) {
            double Phi = 1.0;
            for (Vertex x : ball(c.metric, o, r))
                Phi = std::max(Phi, vd_sup(volume_profile(c.g, c.metric, x), rh, r, n));
            const double eta = std::exp(-21.0 * n * kLn2 - 10.0 * std::log(Phi));
            const auto prof = volume_profile(c.g, c.metric, o);
            const double lo = 4.0 * rh, hi = 0.5 * r;
            // r₁ at closed breakpoints, r₂ also at left limits where the volume is smallest.
            std::vector<std::pair<double, double>> r1s{{lo, prof.at(lo)}}, r2s{{lo, prof.at(lo)}, {hi, prof.at(hi)}};
            for (std::size_t k = 0; k < prof.radii.size(); ++k) {
                const double d = prof.radii[k];
                if (d > lo && d <= hi) {
                    r1s.emplace_back(d, prof.closed[k]);
                    r2s.emplace_back(d, prof.closed[k]);
                    r2s.emplace_back(d, prof.open_at(d));
                }
            }
            for (auto [a, va] : r1s)
                for (auto [b, vb] : r2s) {
                    if (b < a || (b == a && vb < va)) continue;
                    const double lhs = 0.5 * std::pow(b / a, eta) * va;
                    rep.add_point({{"o", double(o)}, {"r", r}, {"r1", a}, {"r2", b}, {"eta", eta}}, lhs, vb);
                }
        }
    return rep;
}

namespace {

// Empirical α = 1 constants for hypotheses posed on balls that cover the
// whole finite graph: V over [lo, ∞) and O over [lo, ∞).
void global_sups(const Ctx& c, double vd_lo, double o_lo, double n, double& Phi, double& Psi) {
    Phi = 1.0;
    Psi = 1.0;
    for (Vertex x = 0; x < c.g.size(); ++x) {
        const auto prof = volume_profile(c.g, c.metric, x);
        Phi = std::max(Phi, vd_sup(prof, vd_lo, kInf, n));
        if (c.hs.in_host(x)) Psi = std::max(Psi, diag_sup(c.hs, prof, x, o_lo, kInf));
    }
}

double max_inv_measure(const WeightedGraph& g, const VertexSubset& B) {
    double s = 0.0;
    for (Vertex v : B) s = std::max(s, 1.0 / g.m(v));
    return s;
}

} // namespace

PropertyReport check_choice_gamma(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("choice_gamma", in, c);
    const double n = in.n, np = in.n_prime > 0 ? in.n_prime : in.n, rh = in.r_hat, diam = c.metric.diameter();
    rep.add_param("n_prime", np);
    rep.add_param("r_hat", rh);
    rep.audit("n' >= n > 0", n > 0 && np >= n);
    rep.audit("nonempty r grid", !in.r.empty());
    rep.audit("32 S <= 8 r_hat", 32.0 * c.S <= 8.0 * rh, "S = " + num(c.S) + ", r_hat = " + num(rh));
    for (double r : in.r) {
        rep.audit("8 r_hat <= r", 8.0 * rh <= r, "r = " + num(r));
        rep.audit("r <= diam / 2", r <= 0.5 * diam, "r = " + num(r) + ", diam = " + num(diam));
    }
    rep.require_audit();
    double Phi, Psi;
    global_sups(c, rh, rh, n, Phi, Psi);
    const double logA = std::exp(19.0 * n * kLn2 + 1.0 + 10.0 * std::log(Phi) + std::log(Psi));
    rep.add_param("Phi", Phi);
    rep.add_param("Psi", Psi);
    rep.add_param("log_A", logA);
    rep.audit("A >= exp(2^{19n} e Phi^10 Psi)", true, "minimal A taken");
    rep.audit("O(r_hat, 2Ar, Psi) and V(r_hat, 2Ar, Phi, n) in B_o(Ar)", true,
              "empirical minimal constants over the whole graph, alpha = 1");
    const VertexSubset all = VertexSubset::all(c.g.size());
    for (Vertex o : centers(c, in.xs))
        for (double r : in.r) {
            if (std::log(c.metric.eccentricity(o)) >= logA + std::log(r))
                throw DomainError("B_o(Ar) does not cover the graph; bounded hosts only");
            const VertexSubset B = ball(c.metric, o, r);
            const double g1 = std::log(ball_volume(c.g, c.metric, o, r) * max_inv_measure(c.g, B)) - np * std::log(r / rh);
            const double g2 = std::log(c.g.total_measure() * max_inv_measure(c.g, all)) - np * (logA + std::log(r / rh));
            const double logGamma = std::max({0.0, g1, g2});
            const double loga = -(2.0 / n) * (logGamma + std::log(logA)) - 2.0 * logA;
            bool exact = false;
            const double cert = certified_log_fk(c, o, r, np, exact);
            rep.add_point_log({{"o", double(o)}, {"r", r}, {"log_gamma", logGamma}, {"exact", exact ? 1.0 : 0.0}}, loga,
                              cert);
        }
    return rep;
}

PropertyReport check_normalized_classical_fk(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("normalized_classical_fk", in, c);
    const double n = in.n, R1 = in.R1, R2 = in.R2, diam = c.metric.diameter();
    rep.add_param("R1", R1);
    rep.add_param("R2", R2);
    rep.audit("n > 0", n > 0);
    rep.audit("m = deg", c.g.measure_kind() == MeasureKind::normalizing);
    rep.audit("S = 1", std::abs(c.S - 1.0) <= 1e-12, "S = " + num(c.S));
    rep.audit("32 <= 8 R1 <= R2", 32.0 <= 8.0 * R1 && 8.0 * R1 <= R2, "R1 = " + num(R1) + ", R2 = " + num(R2));
    rep.audit("R2 <= diam / 2", R2 <= 0.5 * diam, "R2 = " + num(R2) + ", diam = " + num(diam));
    rep.require_audit();
    double Phi, Psi;
    global_sups(c, 0.0, R1, n, Phi, Psi);
    const double alpha = std::max(Phi, Psi);
    const double logA = std::exp(19.0 * n * kLn2 + 1.0);
    const double logGamma = 19.0 * n * kLn2 + 10.0 * std::log(alpha) + n * logA + n * std::log(std::max(1.0, R1));
    const double loga = -(2.0 / n) * (logGamma + 11.0 * std::log(alpha) + std::log(logA)) - 2.0 * logA;
    rep.add_param("alpha", alpha);
    rep.add_param("log_A", logA);
    rep.add_param("log_gamma", logGamma);
    rep.audit("O(R1, 2 A R2, alpha) and V(2 A R2, alpha, n) in B_o(A R2)", true,
              "empirical minimal alpha over the whole graph");
    for (Vertex o : centers(c, in.xs)) {
        bool exact = false;
        const double cert = certified_log_fk(c, o, R2, n, exact);
        rep.add_point_log({{"o", double(o)}, {"r", R2}, {"exact", exact ? 1.0 : 0.0}}, loga, cert);
    }
    return rep;
}

PropertyReport check_fk_localreg_clean(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("fk_localreg_clean", in, c);
    const double n = in.n, R1 = in.R1, R2 = in.R2, diam = c.metric.diameter(), C = in.C;
    rep.add_param("R1", R1);
    rep.add_param("R2", R2);
    rep.add_param("C", C);
    rep.audit("n > 0", n > 0);
    rep.audit("C >= 1", C >= 1.0);
    rep.audit("32 S <= 8 R1 <= R2", 32.0 * c.S <= 8.0 * R1 && 8.0 * R1 <= R2, "R1 = " + num(R1) + ", R2 = " + num(R2));
    rep.audit("R2 <= diam / 2", R2 <= 0.5 * diam, "R2 = " + num(R2) + ", diam = " + num(diam));
    rep.require_audit();
    std::vector<double> radii;
    for (double r : in.r)
        if (r >= 8.0 * R1 && r <= R2) radii.push_back(r);
    if (in.r.empty()) radii = {8.0 * R1, R2};
    bool any = false;
    for (Vertex o : centers(c, in.xs))
        for (double r : radii) {
            const double switch_log = std::max(1.0, 8.0 * R1);
            const double rp = std::log(r) < switch_log ? r : std::pow(std::log(r), n + 3.0);
            const double th = theta(n, 0.5 * rp, c.S);
            double deg_in = 1.0;
            for (Vertex v : ball(c.metric, o, r)) deg_in = std::max(deg_in, c.g.Deg(v));
            const double logA =
                std::exp(19.0 * n * kLn2 + 1.0 + 11.0 * std::log(C) + 11.0 * 0.5 * n * th * std::log(deg_in));
            const bool admissible = kLn2 + logA + std::log(r) <= std::log(R2);
            rep.add_param("log_A(r=" + num(r) + ")", logA);
            if (!admissible) continue;
            any = true;
            double deg_out = 1.0;
            for (Vertex v : ball(c.metric, o, std::exp(logA) * r)) deg_out = std::max(deg_out, c.g.Deg(v));
            const double io = iota_piecewise(n, r, R1);
            const double log_Ar = logA + std::log(r);
            const double np = std::max(n, n * (io + 10.0 * th) * (std::max(0.0, 2.0 * log_Ar) + std::log(deg_out)));
            const double loga = -(2.0 / n) * (18.0 * n * kLn2 + 13.0 * std::log(C) + std::log(logA)) - 2.0 * logA;
            bool exact = false;
            const double cert = certified_log_fk(c, o, r, np, exact);
            rep.add_point_log({{"o", double(o)}, {"r", r}, {"n_prime", np}, {"exact", exact ? 1.0 : 0.0}}, loga, cert);
        }
    rep.vacuous = !any;
    rep.audit("some r in [8 R1, R2] with 2 A(r) r <= R2", any,
              any ? "" : "ln A(r) >= 2^{19n} e exceeds ln(R2 / 2r) on every grid radius");
    return rep;
}

PropertyReport check_localreg_from_fk(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("localreg_from_fk", in, c);
    const double n = in.n;
    rep.audit("n > 0", n > 0);
    rep.audit("nonempty R grid", !in.r.empty());
    for (double R : in.r) rep.audit("R >= S", R >= c.S && R > 0, "R = " + num(R));
    const auto os = centers(c, in.xs);
    for (Vertex o : os)
        for (double R : in.r)
            audit_absolute_fk(rep, c, c.ground(o, R), "B_o(R) for o = " + std::to_string(o) + ", R = " + num(R));
    rep.require_audit();
    for (Vertex o : os)
        for (double R : in.r) {
            const double a = fk_constant_exact(c.g, c.metric, o, R, n, c.fo).a;
            const double lhs = std::log(ball_volume(c.g, c.metric, o, R) / c.g.m(o));
            const double rhs = log_localreg_constant(a, n) + 0.5 * n * log1v(c.g.Deg(o)) + n * std::log(R);
            rep.add_point_log({{"o", double(o)}, {"R", R}, {"a", a}}, lhs, rhs);
        }
    return rep;
}

PropertyReport check_doubling_from_fk(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("doubling_from_fk", in, c);
    const double n = in.n;
    rep.audit("n > 0", n > 0);
    rep.audit("nonempty R grid", !in.r.empty());
    for (double R : in.r) rep.audit("R >= 2 S", R >= 2.0 * c.S && R > 0, "R = " + num(R));
    const auto os = centers(c, in.xs);
    for (Vertex o : os)
        for (double R : in.r)
            audit_absolute_fk(rep, c, c.ground(o, R), "B_o(R) for o = " + std::to_string(o) + ", R = " + num(R));
    rep.require_audit();
    for (Vertex o : os) {
        const auto prof = volume_profile(c.g, c.metric, o);
        const double lnu = 0.5 * n * log1v(c.g.Deg(o));
        for (double R : in.r) {
            const double a = std::min(1.0, fk_constant_exact(c.g, c.metric, o, R, n, c.fo).a);
            const double logC = log_doubling_constant(a, n, c.S);
            const double vR = prof.at(R);
            auto point = [&](double r, double vr) {
                const double rhs = logC + theta(n, r, c.S) * lnu + n * std::log(R / r);
                rep.add_point_log({{"o", double(o)}, {"R", R}, {"r", r}, {"a", a}}, std::log(vR / vr), rhs);
            };
            const double lo = 2.0 * c.S;
            point(lo, prof.at(lo));
            for (std::size_t k = 0; k < prof.radii.size(); ++k) {
                const double d = prof.radii[k];
                if (d > lo && d <= R) {
                    point(d, prof.closed[k]);
                    point(d, prof.open_at(d));
                }
            }
            if (R > lo) point(R, vR);
        }
    }
    return rep;
}

PropertyReport check_full_doubling(const TheoremInputs& in) {
    Ctx c(in);
    PropertyReport rep = start("full_doubling", in, c);
    const double n = in.n, R1 = in.R1, R2 = in.R2;
    rep.add_param("R1", R1);
    rep.add_param("R2", R2);
    rep.audit("n > 0", n > 0);
    rep.audit("R2 >= R1 >= 2 S", R2 >= R1 && R1 >= 2.0 * c.S && R1 > 0, "R1 = " + num(R1) + ", R2 = " + num(R2));
    const auto os = centers(c, in.xs);
    for (Vertex o : os)
        for (double r : breakpoints_between(c.metric, o, R1, R2))
            audit_absolute_fk(rep, c, c.ground(o, r), "B_o(r) for o = " + std::to_string(o) + ", r = " + num(r));
    rep.require_audit();
    for (Vertex o : os) {
        double a = 1.0;
        for (double r : breakpoints_between(c.metric, o, R1, R2))
            a = std::min(a, fk_constant_exact(c.g, c.metric, o, r, n, c.fo).a);
        const auto prof = volume_profile(c.g, c.metric, o);
        const double lnu = 0.5 * n * log1v(c.g.Deg(o));
        const double logCV = log_doubling_constant(a, n, c.S);
        const double logCL = log_localreg_constant(a, n);
        // Radii where volumes change, with left limits for the inner radius.
        std::vector<std::pair<double, double>> inner, outer;
        for (std::size_t k = 0; k < prof.radii.size(); ++k) {
            const double d = prof.radii[k];
            if (d <= 0 || d > R2) continue;
            inner.emplace_back(d, prof.closed[k]);
            inner.emplace_back(d, prof.open_at(d));
            outer.emplace_back(d, prof.closed[k]);
        }
        for (double r : {R1, R2}) {
            inner.emplace_back(r, prof.at(r));
            outer.emplace_back(r, prof.at(r));
        }
        for (auto [r1, v1] : inner)
            for (auto [r2, v2] : outer) {
                if (r2 < r1 || v1 <= 0) continue;
                double rhs;
                if (r2 <= R1)
                    rhs = logCL + lnu + n * std::log(R1);
                else if (r1 <= R1)
                    rhs = logCV + logCL + lnu + n * std::log(R1) + theta(n, R1, c.S) * lnu + n * std::log(r2 / r1);
                else
                    rhs = logCV + theta(n, r1, c.S) * lnu + n * std::log(r2 / r1);
                rep.add_point_log({{"o", double(o)}, {"r1", r1}, {"r2", r2}, {"a", a}}, std::log(v2 / v1), rhs);
            }
    }
    return rep;
}

const std::vector<std::string>& theorem_names() {
    static const std::vector<std::string> names{
        "mv",           "elementary_point",        "elementary_step",   "split",           "upper_general",
        "gaussian_clean", "kappa_bound",           "integrated_heat",   "ball_comparison", "fk_apriori",
        "reverse_doubling", "choice_gamma",        "normalized_classical_fk", "fk_localreg_clean",
        "doubling_from_fk", "localreg_from_fk",    "full_doubling"};
    return names;
}

bool is_theorem(const std::string& name) {
    const auto& v = theorem_names();
    return std::find(v.begin(), v.end(), name) != v.end();
}

PropertyReport theorem_check(const std::string& name, const TheoremInputs& in) {
    using Fn = PropertyReport (*)(const TheoremInputs&);
    static const std::map<std::string, Fn> table{
        {"mv", check_mv},
        {"elementary_point", check_elementary_point},
        {"elementary_step", check_elementary_step},
        {"split", check_split},
        {"upper_general", check_upper_general},
        {"gaussian_clean", check_gaussian_clean},
        {"kappa_bound", check_kappa_bound},
        {"integrated_heat", check_integrated_heat},
        {"ball_comparison", check_ball_comparison},
        {"fk_apriori", check_fk_apriori},
        {"reverse_doubling", check_reverse_doubling},
        {"choice_gamma", check_choice_gamma},
        {"normalized_classical_fk", check_normalized_classical_fk},
        {"fk_localreg_clean", check_fk_localreg_clean},
        {"doubling_from_fk", check_doubling_from_fk},
        {"localreg_from_fk", check_localreg_from_fk},
        {"full_doubling", check_full_doubling},
    };
    auto it = table.find(name);
    if (it == table.end()) throw DomainError("unknown theorem checker: " + name);
    return it->second(in);
}

} // namespace heatfk
