#include <gtest/gtest.h>

#include <cmath>

#include "heatfk/eigen.hpp"
#include "heatfk/error.hpp"
#include "heatfk/families.hpp"
#include "heatfk/heat.hpp"
#include "heatfk/metric.hpp"
#include "heatfk/rng.hpp"
#include "heatfk/scalars.hpp"

using namespace heatfk;

namespace {

WeightedGraph k2() { return generate(complete_spec(2, MeasureKind::counting)); }

} // namespace

TEST(HeatKernel, TwoVertexClosedForm) {
    const WeightedGraph g = k2();
    const HeatSemigroup hs(g);
    const double off = (1 - std::exp(-2.0)) / 2;
    EXPECT_NEAR(hs.kernel(1.0, 0, 1), off, 1e-14);
    EXPECT_NEAR(hs.kernel(1.0, 0, 0), 1 - off, 1e-14);
    EXPECT_NEAR(hs.kernel_spectral(1.0, 0, 1), off, 1e-14);
    EXPECT_NEAR(std::exp(hs.log_kernel(1.0, 0, 1)), off, 1e-14);
    EXPECT_NEAR(std::exp(hs.log_diagonal(1.0, 0)), 1 - off, 1e-14);
}

TEST(HeatKernel, TimeZeroAndNegative) {
    const WeightedGraph g = generate(random_spec(12, 0.4, 0.5, 2.0, 4, MeasureKind::normalizing));
    const HeatSemigroup hs(g);
    for (Vertex x = 0; x < g.size(); ++x)
        for (Vertex y = 0; y < g.size(); ++y) EXPECT_DOUBLE_EQ(hs.kernel(0.0, x, y), x == y ? 1 / g.m(x) : 0.0);
    EXPECT_THROW(hs.kernel(-1.0, 0, 0), DomainError);
}

TEST(HeatKernel, LongTimeLimit) {
    const WeightedGraph g = generate(cycle_spec(8, MeasureKind::counting));
    const HeatSemigroup hs(g);
    for (Vertex x = 0; x < 8; ++x)
        for (Vertex y = 0; y < 8; ++y) EXPECT_NEAR(hs.kernel(50.0, x, y), 1.0 / 8, 1e-12);
}

TEST(HeatKernel, SymmetryConservationSemigroup) {
    for (const auto& s : catalogue()) {
        const WeightedGraph g = generate(s.spec);
        const HeatSemigroup hs(g);
        const Matrix P = hs.kernel_matrix(0.7), Q = hs.kernel_matrix(1.3), PQ = hs.kernel_matrix(2.0);
        const std::size_t n = g.size();
        for (Vertex x = 0; x < n; ++x) {
            double mass = 0.0;
            for (Vertex y = 0; y < n; ++y) {
                EXPECT_NEAR(P(x, y), P(y, x), 1e-10);
                mass += g.m(y) * P(x, y);
            }
            EXPECT_NEAR(mass, 1.0, 1e-10) << s.name;
        }
        for (Vertex x = 0; x < n; x += 3)
            for (Vertex y = 0; y < n; y += 2) {
                double sum = 0.0;
                for (Vertex z = 0; z < n; ++z) sum += g.m(z) * P(x, z) * Q(z, y);
                EXPECT_NEAR(sum, PQ(x, y), 1e-9) << s.name;
            }
    }
}

TEST(HeatKernel, SerialEqualsParallel) {
    const WeightedGraph g = generate(box_spec(2, 5, MeasureKind::normalizing));
    const HeatSemigroup hs(g);
    EXPECT_TRUE(hs.kernel_matrix(3.0, Exec::serial) == hs.kernel_matrix(3.0, Exec::parallel));
}

TEST(HeatKernel, DirichletHostKillsMass) {
    const WeightedGraph g = generate(path_spec(9, MeasureKind::counting));
    const HeatSemigroup hs(g, SpectralMode::dirichlet_host(VertexSubset({1, 2, 3, 4, 5, 6, 7})));
    EXPECT_NEAR(hs.bottom(), 2 - 2 * std::cos(M_PI / 8), 1e-13);
    const auto col = hs.kernel_column(2.0, 4);
    EXPECT_EQ(col[0], 0.0);
    EXPECT_EQ(col[8], 0.0);
    double mass = 0.0;
    for (double v : col) mass += v;
    EXPECT_LT(mass, 1.0);
    EXPECT_GT(mass, 0.0);
    EXPECT_NEAR(hs.kernel(2.0, 4, 2), hs.kernel_spectral(2.0, 4, 2), 1e-13);
}

TEST(Evolve, ConstantsEigenvectorsAndColumns) {
    const WeightedGraph g = generate(random_spec(16, 0.3, 0.5, 2.0, 8, MeasureKind::normalizing));
    const HeatSemigroup hs(g);
    const std::vector<double> ones(g.size(), 2.0);
    for (double v : hs.evolve(1.5, ones)) EXPECT_NEAR(v, 2.0, 1e-12);

    // Eigenvector of Δ: f = M^{-1/2} v_k.
    const auto& spec = hs.spectrum();
    const std::size_t k = 3;
    std::vector<double> f(g.size());
    for (Vertex x = 0; x < g.size(); ++x) f[x] = spec.vectors(x, k) / std::sqrt(g.m(x));
    const auto u = hs.evolve(0.8, f);
    for (Vertex x = 0; x < g.size(); ++x) EXPECT_NEAR(u[x], std::exp(-0.8 * spec.values[k]) * f[x], 1e-12);

    std::vector<double> delta(g.size(), 0.0);
    delta[5] = 1.0;
    const auto d = hs.evolve(0.8, delta);
    for (Vertex x = 0; x < g.size(); ++x) EXPECT_NEAR(d[x], hs.kernel(0.8, x, 5) * g.m(5), 1e-12);
    EXPECT_THROW(hs.evolve(-0.1, delta), DomainError);
}

TEST(Ode, MatchesClosedFormAndSpectral) {
    const WeightedGraph g = k2();
    const auto u = ode_crosscheck(g, 1.0, 0, ode_default_steps(g, 1.0));
    EXPECT_NEAR(u[1], (1 - std::exp(-2.0)) / 2, 1e-8);
    const auto u0 = ode_crosscheck(g, 0.0, 0, 1);
    EXPECT_EQ(u0[0], 1.0);
    EXPECT_EQ(u0[1], 0.0);

    const WeightedGraph p = generate(path_spec(10, MeasureKind::counting));
    const HeatSemigroup hs(p);
    const auto v = ode_crosscheck(p, 2.0, 3, ode_default_steps(p, 2.0));
    for (Vertex x = 0; x < 10; ++x) EXPECT_NEAR(v[x], hs.kernel(2.0, x, 3), 1e-6);
    EXPECT_THROW(ode_crosscheck(p, 2.0, 3, 2), DomainError);
}

TEST(WeightedNorm, EtaZeroIsDiagonal) {
    for (const auto& s : catalogue()) {
        const WeightedGraph g = generate(s.spec);
        const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
        const HeatSemigroup hs(g);
        for (Vertex x = 0; x < g.size(); x += 5)
            for (double t : {0.3, 2.0})
                EXPECT_NEAR(weighted_norm_E(hs, M, x, t, 0.0), hs.kernel(2 * t, x, x), 1e-10) << s.name;
    }
}

TEST(WeightedNorm, TwoVertexClosedForm) {
    const WeightedGraph g = k2();
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    const HeatSemigroup hs(g);
    const double off = (1 - std::exp(-2.0)) / 2, on = 1 - off;
    const double want = (on * on + off * off * std::exp(2.0)) * std::exp(-2 * (std::cosh(1.0) - 1));
    EXPECT_NEAR(weighted_norm_E(hs, M, 0, 1.0, 1.0), want, 1e-13);
    EXPECT_NEAR(log_weighted_norm_E(hs, M, 0, 1.0, 1.0), std::log(want), 1e-13);
}

TEST(WeightedNorm, NonincreasingInTime) {
    const WeightedGraph g = generate(cycle_spec(8, MeasureKind::counting));
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    const HeatSemigroup hs(g);
    for (double eta : {0.0, 0.5, 1.0, 2.0}) {
        double prev = INFINITY;
        for (double t : geometric_grid(0.05, 20.0)) {
            const double E = weighted_norm_E(hs, M, 0, t, eta);
            EXPECT_LE(E, prev * (1 + 1e-9)) << "eta=" << eta << " t=" << t;
            prev = E;
        }
    }
}

TEST(WeightedNorm, LemmaBoundOnBalls) {
    const WeightedGraph g = generate(path_spec(41, MeasureKind::counting));
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    const HeatSemigroup hs(g);
    const Vertex o = 20;
    const double S = M.jump_size();
    for (double R : {0.0, 1.0, 3.0})
        for (double T : {0.5, 2.0, 8.0})
            for (double eta : {0.5, 1.0, 2.0}) {
                const auto col = hs.kernel_column(T, o);
                double sum = 0.0;
                for (Vertex z = 0; z < g.size(); ++z) {
                    const double rho0 = std::max(0.0, M(o, z) - R);
                    sum += g.m(z) * col[z] * col[z] * std::exp(2 * eta * rho0 - 2 * T * h_cosh(eta, S));
                }
                EXPECT_LE(sum, 1 / g.m(o) * (1 + 1e-9));
            }
}

TEST(CarreDuChamp, Examples) {
    const WeightedGraph g = k2();
    const std::vector<double> phi{1.0, 0.0};
    const auto d = carre_du_champ(g, phi, phi);
    EXPECT_EQ(d, (std::vector<double>{1.0, 1.0}));
    const std::vector<double> c{3.0, 3.0};
    EXPECT_EQ(carre_du_champ(g, c, phi), (std::vector<double>{0.0, 0.0}));
}

TEST(CarreDuChamp, ExponentialFormMatchesCosh) {
    Lcg64 rng(17);
    const WeightedGraph g = generate(random_spec(24, 0.3, 0.5, 2.0, 7, MeasureKind::counting));
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> w(g.size()), ep(g.size()), em(g.size());
        for (Vertex x = 0; x < g.size(); ++x) {
            w[x] = rng.uniform(-2, 2);
            ep[x] = std::exp(w[x] / 2);
            em[x] = std::exp(-w[x] / 2);
        }
        const auto a = carre_du_champ(g, ep, em), b = carre_du_champ_exp(g, w);
        for (Vertex x = 0; x < g.size(); ++x) EXPECT_NEAR(a[x], b[x], 1e-12 * std::max(1.0, a[x]));
    }
}

TEST(Identities, FuzzedResiduals) {
    Lcg64 rng(21);
    for (int trial = 0; trial < 1000; ++trial) {
        const WeightedGraph g = generate(random_spec(8, 0.4, 0.5, 2.0, 100 + trial % 20, MeasureKind::counting));
        std::vector<double> u(g.size()), w(g.size());
        for (auto& v : u) v = rng.uniform(-3, 3);
        for (auto& v : w) v = rng.uniform(-3, 3);
        const auto r = elementary_identities_check(g, u, w);
        EXPECT_LE(r.identity_i, 1e-12);
        EXPECT_LE(r.identity_ii, 1e-12);
        EXPECT_GE(r.slack_iii, -1e-12);
    }
}

TEST(Identities, DegenerateInputs) {
    const WeightedGraph g = generate(cycle_spec(6, MeasureKind::counting));
    const std::vector<double> zero(6, 0.0), u{1, -2, 3, 0, 2, 1};
    const auto a = elementary_identities_check(g, u, zero);
    EXPECT_EQ(a.identity_i, 0.0);
    const auto b = elementary_identities_check(g, zero, u);
    EXPECT_EQ(b.identity_i, 0.0);
    // (ii) involves ω only.
    EXPECT_LE(b.identity_ii, 1e-15);
    EXPECT_GE(b.slack_iii, 0.0);
}

TEST(Omega, ClosedForms) {
    const WeightedGraph g = generate(path_spec(9, MeasureKind::counting));
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    const double S = M.jump_size();
    for (auto kind : {OmegaKind::forward, OmegaKind::backward, OmegaKind::centered}) {
        const auto w0 = make_omega(kind, 4, 1.0, 2.0, 0.0, M);
        for (double t : {0.0, 1.0, 2.0})
            for (Vertex x = 0; x < 9; ++x) EXPECT_EQ(w0.value(t, x), 0.0);
        const auto w = make_omega(kind, 4, 1.0, 2.0, 0.7, M);
        EXPECT_NEAR(w.h, h_cosh(0.7, S), 1e-15);
        for (double t : {0.0, 0.5, 2.0})
            for (Vertex x = 0; x < 9; ++x) {
                const double rho = M(4, x), rho0 = std::max(0.0, rho - 1.0);
                double want = 0.0;
                if (kind == OmegaKind::forward) want = -2 * 0.7 * rho0 - 2 * (t - 2.0) * w.h;
                if (kind == OmegaKind::backward) want = 2 * 0.7 * rho0 - 2 * t * w.h;
                if (kind == OmegaKind::centered) want = 2 * 0.7 * rho - 2 * t * w.h;
                EXPECT_NEAR(w.value(t, x), want, 1e-12);
                if (kind == OmegaKind::forward && rho <= 1.0 && t <= 2.0) EXPECT_GE(w.value(t, x), 0.0);
            }
        if (kind == OmegaKind::forward) EXPECT_EQ(w.value(2.0, 4), 0.0);
    }
    EXPECT_NEAR(h_cosh(1.0, 1.0), 0.543081, 1e-6);
}

TEST(Eikonal, AllKindsOnCatalogue) {
    for (const auto& s : catalogue()) {
        const WeightedGraph g = generate(s.spec);
        const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
        const auto times = geometric_grid(0.1, 4.0, 1.5);
        for (auto kind : {OmegaKind::forward, OmegaKind::backward, OmegaKind::centered})
            for (double eta : {0.0, 0.5, 1.0, 3.0}) {
                const auto w = make_omega(kind, 0, 1.0, 4.0, eta, M);
                const auto res = check_eikonal(g, w, times);
                EXPECT_TRUE(res.holds()) << s.name << " eta=" << eta << " " << res.min_margin;
                if (eta == 0.0) EXPECT_EQ(res.min_margin, 0.0);
            }
    }
}

TEST(Eikonal, BrokenFieldFails) {
    const WeightedGraph g = generate(cycle_spec(8, MeasureKind::counting));
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    const auto w = broken_omega(make_omega(OmegaKind::centered, 0, 0.0, 1.0, 1.0, M));
    EXPECT_FALSE(check_eikonal(g, w, {0.5, 1.0}).holds());
}

TEST(Eikonal, SampledFieldAgrees) {
    const WeightedGraph g = generate(cycle_spec(8, MeasureKind::counting));
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    const auto w = make_omega(OmegaKind::centered, 0, 0.0, 1.0, 1.0, M);
    const auto a = check_eikonal(g, w, {0.5, 1.0});
    const auto b = check_eikonal(g, [&](double t, Vertex x) { return w.value(t, x); }, {0.5, 1.0}, 1e-4);
    EXPECT_NEAR(a.min_margin, b.min_margin, 1e-7);
}

TEST(Xi, NonincreasingExamples) {
    const WeightedGraph c8 = generate(cycle_spec(8, MeasureKind::counting));
    const auto M = IntrinsicMetric::build(c8, MetricRule::degree_path);
    const HeatSemigroup hs(c8);
    std::vector<double> u0(8, 0.0);
    u0[0] = 1.0;
    const auto times = geometric_grid(0.1, 5.0);
    EXPECT_TRUE(xi_monitor(hs, make_omega(OmegaKind::centered, 0, 0, 5, 0.0, M), u0, 0.0, times).nonincreasing);
    EXPECT_TRUE(xi_monitor(hs, make_omega(OmegaKind::centered, 0, 0, 5, 1.0, M), u0, 0.0, times).nonincreasing);

    const WeightedGraph p9 = generate(path_spec(9, MeasureKind::counting));
    const auto Mp = IntrinsicMetric::build(p9, MetricRule::degree_path);
    const HeatSemigroup hk(p9, SpectralMode::dirichlet_host(VertexSubset({1, 2, 3, 4, 5, 6, 7})));
    std::vector<double> v0(9, 0.0);
    v0[4] = 1.0;
    const auto res = xi_monitor(hk, make_omega(OmegaKind::forward, 4, 1.0, 5.0, 0.5, Mp), v0, hk.bottom(), times);
    EXPECT_TRUE(res.nonincreasing);
    EXPECT_LE(res.worst_log_ratio, std::log1p(1e-9));
}

TEST(Xi, RefusesBrokenFieldAndNegativeData) {
    const WeightedGraph g = generate(cycle_spec(8, MeasureKind::counting));
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    const HeatSemigroup hs(g);
    std::vector<double> u0(8, 0.0);
    u0[0] = 1.0;
    const auto times = geometric_grid(0.1, 2.0);
    const auto broken = broken_omega(make_omega(OmegaKind::centered, 0, 0, 2, 1.0, M));
    EXPECT_THROW(xi_monitor(hs, broken, u0, 0.0, times), HypothesisError);
    u0[1] = -1.0;
    EXPECT_THROW(xi_monitor(hs, make_omega(OmegaKind::centered, 0, 0, 2, 1.0, M), u0, 0.0, times), HypothesisError);
}

TEST(Subsolution, Residuals) {
    const std::vector<double> f{1.0, 0.0, 2.0, 0.5};
    const double dt = 1e-3;
    {
        const WeightedGraph g = generate(complete_spec(4, MeasureKind::normalizing));
        const HeatSemigroup hs(g);
        std::vector<std::vector<double>> u;
        for (int k = 0; k < 50; ++k) u.push_back(hs.evolve(0.2 + k * dt, f));
        EXPECT_LE(subsolution_residual(g, u, dt).max_abs, 1e-6);
    }
    const WeightedGraph g = generate(complete_spec(4, MeasureKind::counting));
    const HeatSemigroup hs(g);
    std::vector<std::vector<double>> u;
    for (int k = 0; k < 50; ++k) u.push_back(hs.evolve(0.2 + k * dt, f));
    // Taylor bound: one-sided differences err by dt²/3·|u'''| = dt²/3·|Δ³u|.
    auto d3 = apply_laplacian(g, apply_laplacian(g, apply_laplacian(g, u.front())));
    double top = 0.0;
    for (double v : d3) top = std::max(top, std::abs(v));
    EXPECT_LE(subsolution_residual(g, u, dt).max_abs, dt * dt / 3 * top * 1.01);

    // e^{ct}·v with v the top eigenfunction and c < −μ.
    const auto& spec = hs.spectrum();
    const double mu = spec.values.back();
    std::vector<double> v(4);
    for (Vertex x = 0; x < 4; ++x) v[x] = std::abs(spec.vectors(x, 0));
    std::vector<std::vector<double>> w;
    for (int k = 0; k < 5; ++k) {
        std::vector<double> row(4);
        for (Vertex x = 0; x < 4; ++x) row[x] = std::exp(-(mu + 1) * k * 0.01) * v[x];
        w.push_back(row);
    }
    EXPECT_LT(subsolution_residual(g, w, 0.01).max_residual, 0.0);

    const std::vector<std::vector<double>> flat(4, std::vector<double>(4, 2.0));
    EXPECT_EQ(subsolution_residual(g, flat, 0.1).max_abs, 0.0);
    EXPECT_THROW(subsolution_residual(g, {f, f}, 0.1), DomainError);
}
