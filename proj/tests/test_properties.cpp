#include <gtest/gtest.h>

#include <cmath>

#include "heatfk/bounds.hpp"
#include "heatfk/error.hpp"
#include "heatfk/families.hpp"
#include "heatfk/heat.hpp"
#include "heatfk/metric.hpp"
#include "heatfk/scalars.hpp"
#include "heatfk/spectral.hpp"

using namespace heatfk;

namespace {

struct Host {
    WeightedGraph g;
    IntrinsicMetric metric;
    HeatSemigroup hs;
    Host(WeightedGraph graph, MetricRule rule)
        : g(std::move(graph)), metric(IntrinsicMetric::build(g, rule)), hs(g) {}
    Host(const Host&) = delete;
};

} // namespace

TEST(Corrections, UniformProfileIsTrivial) {
    Host s(generate(path_spec(41, MeasureKind::normalizing)), MetricRule::combinatorial);
    BoundParams p = BoundParams::from(s.g, s.metric, s.hs);
    p.profile = Profile::uniform;
    const auto c = corrections(s.g, s.metric, p, 20, 23, 16.0);
    EXPECT_EQ(c.nu, 1.0);
    EXPECT_EQ(c.Phi, 1.0);
    EXPECT_EQ(c.Psi, 1.0);
}

TEST(Corrections, CountingProfile) {
    Host s(generate(star_spec(6, MeasureKind::counting)), MetricRule::degree_path);
    BoundParams p = BoundParams::from(s.g, s.metric, s.hs);
    p.profile = Profile::counting;
    p.n = 2.0;
    EXPECT_EQ(nu(s.g, p, 1, 2.0), 1.0);
    EXPECT_DOUBLE_EQ(nu(s.g, p, 0, 2.0), 6.0);
    p.R1 = 0.5;
    double prev = INFINITY;
    for (double r = 0.5; r < 1e6; r *= 2) {
        const double v = Phi(s.g, p, 0, r, r);
        EXPECT_DOUBLE_EQ(v, std::pow(6.0, theta(2.0, r, p.S)));
        EXPECT_LE(v, prev);
        prev = v;
    }
    EXPECT_LT(Phi(s.g, p, 0, 1e12, 1e12), 1.05);
    const double tau = 3.0;
    const double sr = std::sqrt(tau_rho(tau, s.metric(0, 2), p.S));
    EXPECT_DOUBLE_EQ(std::pow(Psi(s.g, s.metric, p, 0, 2, tau), 2),
                     Phi(s.g, p, 0, sr, std::sqrt(tau)) * Phi(s.g, p, 2, sr, std::sqrt(tau)));
}

TEST(GaussianRhs, PathFactorByFactor) {
    Host s(generate(path_spec(41, MeasureKind::normalizing)), MetricRule::combinatorial);
    BoundParams p = BoundParams::from(s.g, s.metric, s.hs);
    p.profile = Profile::uniform;
    p.n = 1.0;
    ASSERT_EQ(p.S, 1.0);
    ASSERT_EQ(p.Lambda, 0.0);
    const double t = 16.0, rho = 3.0;
    const double poly = std::max(1.0, t * std::pow(std::asinh(rho / t), 2));
    const double z = rho * std::asinh(rho / t) - (std::sqrt(rho * rho + t * t) - t);
    const double mb = 18.0;  // nine interior vertices of degree two
    const double want = std::sqrt(poly) / mb * std::exp(-z);
    EXPECT_NEAR(gaussian_rhs(s.g, s.metric, p, 20, 23, t), want, 1e-14 * want);
    EXPECT_NEAR(log_gaussian_rhs(s.g, s.metric, p, 20, 23, t), std::log(want), 1e-13);
    // ρ = 0: no Gaussian or polynomial factor.
    EXPECT_NEAR(gaussian_rhs(s.g, s.metric, p, 20, 20, t), 1.0 / mb, 1e-15);
    p.R1 = 5.0;
    EXPECT_THROW(gaussian_rhs(s.g, s.metric, p, 20, 23, t), DomainError);
}

TEST(GaussianRhs, SpectralDampingBeyondR2) {
    Host s(generate(path_spec(41, MeasureKind::normalizing)), MetricRule::combinatorial);
    BoundParams p = BoundParams::from(s.g, s.metric, s.hs);
    p.R2 = 2.0;
    p.Lambda = 0.3;
    const double a = log_gaussian_rhs(s.g, s.metric, p, 20, 20, 4.0);
    const double b = log_gaussian_rhs(s.g, s.metric, p, 20, 20, 9.0);
    EXPECT_NEAR(a - b, 0.3 * 5.0, 1e-12);
}

TEST(CheckProperty, VolumeDoublingOnIntegerLine) {
    Host s(generate(box_spec(1, 40, MeasureKind::counting)), MetricRule::combinatorial);
    BoundParams p;
    p.profile = Profile::uniform;
    p.C = 3.0;
    p.n = 1.0;
    PropertyGrid grid;
    grid.xs = {20};
    for (double r = 2.0; r <= 10.0; r += 0.25) grid.r.push_back(r);
    const auto rep = check_property(s.g, s.metric, s.hs, PropertyKind::VD, p, grid);
    EXPECT_TRUE(rep.verdict());
    // Oracle: interval volumes 2⌊r⌋+1.
    for (const auto& pt : rep.grid) {
        const double r = pt.coords[1].second, R = pt.coords[2].second;
        EXPECT_DOUBLE_EQ(pt.lhs, (2 * std::floor(R) + 1) / (2 * std::floor(r) + 1));
    }
    p.C = 1.0;
    EXPECT_FALSE(check_property(s.g, s.metric, s.hs, PropertyKind::VD, p, grid).verdict());
    p.R1 = 3.0;
    EXPECT_THROW(check_property(s.g, s.metric, s.hs, PropertyKind::VD, p, grid), DomainError);
}

TEST(CheckProperty, LocalRegularitySingletonBall) {
    const WeightedGraph g = generate(path_spec(5, MeasureKind::counting));
    const auto M = IntrinsicMetric::build(g, MetricRule::combinatorial).scaled(g, 2.0);
    const HeatSemigroup hs(g);
    BoundParams p;
    p.n = 1.0;
    PropertyGrid grid;
    grid.xs = {0, 2};
    grid.r = {1.0, 1.5};
    const auto rep = check_property(g, M, hs, PropertyKind::L, p, grid);
    EXPECT_TRUE(rep.verdict());
    for (const auto& pt : rep.grid) {
        EXPECT_EQ(pt.lhs, 1.0);
        EXPECT_EQ(pt.rhs, pt.coords[1].second);
    }
}

TEST(CheckProperty, DiagonalMatchesGaussianAtRhoZero) {
    Host s(generate(cycle_spec(16, MeasureKind::counting)), MetricRule::degree_path);
    BoundParams p = BoundParams::from(s.g, s.metric, s.hs);
    p.profile = Profile::counting;
    p.n = 1.0;
    p.C = 4.0;
    p.R2 = 5.0;
    PropertyGrid grid;
    grid.xs = {0, 3, 7};
    grid.t = {0.5, 2.0, 8.0, 25.0};
    const auto G = check_property(s.g, s.metric, s.hs, PropertyKind::G, p, grid);
    const auto O = check_property(s.g, s.metric, s.hs, PropertyKind::O, p, grid);
    for (const auto& o : O.grid) {
        const double x = o.coords[0].second, t = o.coords[1].second;
        for (const auto& gp : G.grid)
            if (gp.coords[0].second == x && gp.coords[1].second == x && gp.coords[2].second == t)
                EXPECT_GE(o.log_margin, gp.log_margin - 1e-12);
    }
}

TEST(CheckProperty, FaberKrahnSelfConsistent) {
    Host s(generate(random_spec(24, 0.3, 0.5, 2.0, 7, MeasureKind::counting)), MetricRule::degree_path);
    for (Vertex x : {5, 9, 11})
        for (double r : {0.3, 0.4}) {
            const auto est = fk_constant_exact(s.g, s.metric, x, r, 2.0);
            BoundParams p;
            p.a = est.a;
            p.n = 2.0;
            PropertyGrid grid;
            grid.xs = {x};
            grid.r = {r};
            const auto rep = check_property(s.g, s.metric, s.hs, PropertyKind::FK, p, grid);
            EXPECT_TRUE(rep.verdict());
            EXPECT_TRUE(rep.certified());
            EXPECT_EQ(rep.min_log_margin(), 0.0);
            p.a = est.a * 1.01;
            EXPECT_FALSE(check_property(s.g, s.metric, s.hs, PropertyKind::FK, p, grid).verdict());
        }
}

TEST(CheckProperty, FaberKrahnWholeGraphBallFails) {
    Host s(generate(complete_spec(4, MeasureKind::counting)), MetricRule::degree_path);
    BoundParams p;
    p.a = 0.1;
    PropertyGrid grid;
    grid.xs = {0};
    grid.r = {5.0};
    EXPECT_FALSE(check_property(s.g, s.metric, s.hs, PropertyKind::FK, p, grid).verdict());
}

TEST(DimensionPrime, UnitDegreeConstantA) {
    BoundParams p;
    p.n = 1.0;
    p.C = 1.0;
    DimensionProfile prof;
    prof.log_deg_inner = [](double) { return 0.0; };
    prof.log_deg_outer = [](double) { return 0.0; };
    const double want = std::pow(2.0, 19) * std::exp(1.0);
    for (double lr : {10.0, 100.0, 1000.0}) {
        const auto d = dimension_prime_profile(p, lr, prof);
        EXPECT_NEAR(d.log_A, want, 1e-9 * want);
        EXPECT_TRUE(d.converged);
    }
    EXPECT_THROW(dimension_prime_profile(p, 0.5, prof), DomainError);
}

TEST(DimensionPrime, DimensionTrendsDown) {
    BoundParams p;
    p.n = 1.0;
    DimensionProfile prof;
    prof.log_deg_inner = [](double) { return std::log(2.0); };
    prof.log_deg_outer = [](double) { return std::log(2.0); };
    double prev = INFINITY;
    for (double lr : {1e3, 1e4, 1e5}) {
        const auto d = dimension_prime_profile(p, lr, prof);
        EXPECT_LT(d.n_prime, prev);
        EXPECT_GE(d.n_prime, p.n);
        prev = d.n_prime;
    }
}

TEST(DimensionPrime, APrimeDecreasingInC) {
    DimensionProfile prof;
    prof.log_deg_inner = [](double) { return 0.0; };
    prof.log_deg_outer = [](double) { return 0.0; };
    double prev = INFINITY;
    for (double C : {1.0, 1.5, 3.0}) {
        BoundParams p;
        p.n = 1.0;
        p.C = C;
        const auto d = dimension_prime_profile(p, 50.0, prof);
        EXPECT_TRUE(std::isfinite(d.log_a_prime));
        EXPECT_LT(d.log_a_prime, prev);
        prev = d.log_a_prime;
    }
}

TEST(DimensionPrime, RefusesRadiusPastHost) {
    Host s(generate(path_spec(20, MeasureKind::counting)), MetricRule::degree_path);
    BoundParams p = BoundParams::from(s.g, s.metric, s.hs);
    p.profile = Profile::counting;
    EXPECT_THROW(dimension_prime(s.g, s.metric, p, 10, std::exp(1.0)), DomainError);
}
