#include <gtest/gtest.h>

#include <cmath>

#include "heatfk/eigen.hpp"
#include "heatfk/error.hpp"
#include "heatfk/families.hpp"
#include "heatfk/metric.hpp"
#include "heatfk/rng.hpp"
#include "heatfk/spectral.hpp"

using namespace heatfk;

namespace {

Matrix from_rows(std::vector<std::vector<double>> rows) {
    Matrix A(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) A(i, j) = rows[i][j];
    return A;
}

WeightedGraph p5() { return generate(path_spec(5, MeasureKind::counting)); }

} // namespace

TEST(Eigen, TwoByTwo) {
    const auto d = eigendecompose(from_rows({{1, -1}, {-1, 1}}));
    EXPECT_NEAR(d.values[0], 0.0, 1e-15);
    EXPECT_NEAR(d.values[1], 2.0, 1e-15);
}

TEST(Eigen, IdentityAndDiagonal) {
    for (double v : eigendecompose(Matrix::identity(5)).values) EXPECT_EQ(v, 1.0);
    const auto d = eigendecompose(from_rows({{3, 0, 0}, {0, -1, 0}, {0, 0, 2}}));
    EXPECT_EQ(d.values, (std::vector<double>{-1, 2, 3}));
}

TEST(Eigen, RandomSymmetricInvariants) {
    Lcg64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 3 + trial * 4;
        Matrix A(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) A(i, j) = A(j, i) = rng.uniform(-1, 1);
        const auto d = eigendecompose(A);
        EXPECT_LE(d.reconstruction_error(A), 1e-10 * A.max_abs());
        EXPECT_LE(d.orthonormality_error(), 1e-10);
        EXPECT_TRUE(std::is_sorted(d.values.begin(), d.values.end()));
        const auto v = eigenvalues(A);
        for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(v[k], d.values[k], 1e-12);
    }
}

TEST(Eigen, AsymmetricThrows) { EXPECT_THROW(eigendecompose(from_rows({{1, 2}, {0, 1}})), DomainError); }

TEST(Lambda, Examples) {
    const WeightedGraph g = p5();
    EXPECT_NEAR(dirichlet_lambda(g, VertexSubset({1, 2, 3})), 2 - std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(dirichlet_lambda(g, VertexSubset::all(5)), 0.0, 1e-14);
    EXPECT_THROW(dirichlet_lambda(g, VertexSubset()), DomainError);
    EXPECT_NEAR(spectral_bottom(g, SpectralMode::full()), 0.0, 1e-14);
    EXPECT_NEAR(spectral_bottom(g, SpectralMode::dirichlet_host(VertexSubset({1, 2, 3}))), 2 - std::sqrt(2.0),
                1e-14);
    EXPECT_DOUBLE_EQ(spectral_bottom(g, SpectralMode::dirichlet_host(VertexSubset({2}))), g.Deg(2));
}

TEST(Lambda, SingletonIsDegOnRandomGraphs) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto kind = seed % 2 ? MeasureKind::counting : MeasureKind::normalizing;
        const WeightedGraph g = generate(random_spec(10, 0.4, 0.5, 2.0, seed, kind));
        const Vertex o = seed % g.size();
        EXPECT_NEAR(dirichlet_lambda(g, VertexSubset({o})), g.Deg(o), 1e-10);
    }
}

TEST(Lambda, DomainMonotonicity) {
    const WeightedGraph g = generate(random_spec(24, 0.3, 0.5, 2.0, 7, MeasureKind::counting));
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    const VertexSubset B = ball(M, 9, 0.4);
    ASSERT_LE(B.size(), 12u);
    const std::size_t k = std::min<std::size_t>(B.size(), 8);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<Vertex> u;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) u.push_back(B[i]);
        const double lu = dirichlet_lambda(g, VertexSubset(u));
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1) continue;
            auto v = u;
            v.push_back(B[i]);
            EXPECT_GE(lu, dirichlet_lambda(g, VertexSubset::from_unsorted(v)) - 1e-10);
        }
    }
}

TEST(FkExact, PathFiveExample) {
    const WeightedGraph g = p5();
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    const auto est = fk_constant_exact(g, M, 2, 0.71, 1.0);
    EXPECT_NEAR(est.a, 2 * 0.71 * 0.71 / 9, 1e-14);
    EXPECT_EQ(est.witness.items(), std::vector<Vertex>{1});
    EXPECT_EQ(est.ball.items(), (std::vector<Vertex>{1, 2, 3}));
    EXPECT_DOUBLE_EQ(est.lambda_witness, 2.0);

    const auto heur = fk_constant_heuristic(g, M, 2, 0.71, 1.0);
    EXPECT_GE(heur.a, est.a - 1e-12);
    EXPECT_LE(heur.a, dirichlet_lambda(g, est.ball) * 0.71 * 0.71 + 1e-12);
}

TEST(FkExact, SingletonBall) {
    const WeightedGraph g = p5();
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    const auto est = fk_constant_exact(g, M, 2, 0.5, 1.0);
    EXPECT_DOUBLE_EQ(est.a, g.Deg(2) * 0.25);
    const auto heur = fk_constant_heuristic(g, M, 2, 0.5, 1.0);
    EXPECT_DOUBLE_EQ(heur.a, est.a);
}

TEST(FkExact, WholeGraphBallThrows) {
    const WeightedGraph g = p5();
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    EXPECT_THROW(fk_constant_exact(g, M, 2, 10.0, 1.0), DomainError);
    EXPECT_THROW(fk_constant_heuristic(g, M, 2, 10.0, 1.0), DomainError);
}

TEST(FkExact, CapExceededThrows) {
    const WeightedGraph g = generate(box_spec(2, 8, MeasureKind::counting));
    const auto M = IntrinsicMetric::build(g, MetricRule::combinatorial);
    FkOptions opt;
    opt.cap = 4;
    EXPECT_THROW(fk_constant_exact(g, M, 40, 1.0, 2.0, opt), DomainError);
}

TEST(FkExact, InequalityHoldsOnEverySubset) {
    const WeightedGraph g = generate(random_spec(24, 0.3, 0.5, 2.0, 7, MeasureKind::normalizing));
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    for (Vertex x : {0, 5, 11}) {
        for (double r : {0.8, 1.2}) {
            const auto est = fk_constant_exact(g, M, x, r, 2.0);
            const std::size_t k = est.ball.size();
            ASSERT_LE(k, 12u);
            const double mB = ball_volume(g, M, x, r);
            for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
                std::vector<Vertex> u;
                double mU = 0.0;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask >> i & 1) {
                        u.push_back(est.ball[i]);
                        mU += g.m(est.ball[i]);
                    }
                EXPECT_GE(dirichlet_lambda(g, VertexSubset(u)), est.a / (r * r) * (mB / mU) - 1e-10);
            }
            double mW = 0.0;
            for (Vertex w : est.witness) mW += g.m(w);
            EXPECT_NEAR(est.a * (mB / mW) / (r * r), est.lambda_witness, 1e-10);
            // Local regularity consequence with n = 2: m(B)/m(x) ≤ (4/a)·ν_x·r².
            const double nu = std::max(1.0, g.deg(x));
            EXPECT_LE(mB / g.m(x), 4.0 / est.a * nu * r * r * (1 + 1e-12));
        }
    }
}

TEST(FkHeuristic, DominatesExact) {
    for (const auto& s : catalogue()) {
        const WeightedGraph g = generate(s.spec);
        const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
        for (Vertex x = 0; x < g.size(); x += 4) {
            for (double r : {0.6, 1.0, 1.6}) {
                const VertexSubset B = ball(M, x, r);
                if (B.size() > 12 || B.size() == g.size()) continue;
                const auto ex = fk_constant_exact(g, M, x, r, 2.0);
                const auto he = fk_constant_heuristic(g, M, x, r, 2.0);
                EXPECT_GE(he.a, ex.a - 1e-12) << s.name;
                EXPECT_GE(ex.a, fk_monotone_lower_bound(g, B, ball_volume(g, M, x, r), r, 2.0) - 1e-12);
            }
        }
    }
}

TEST(FkProfile, SmallRadiiGiveDegRows) {
    const WeightedGraph g = generate(random_spec(24, 0.3, 0.5, 2.0, 7, MeasureKind::counting));
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    double min_len = 1e300;
    for (const Edge& e : g.edges()) min_len = std::min(min_len, M(e.u, e.v));
    const std::vector<double> grid{0.25 * min_len, 0.5 * min_len};
    const auto rows = fk_profile(g, M, {0, 3, 7}, grid.front(), grid.back(), [](double) { return 1.0; }, grid);
    ASSERT_EQ(rows.size(), 6u);
    for (const auto& row : rows) {
        EXPECT_TRUE(row.certified);
        EXPECT_NEAR(row.estimate.a, g.Deg(row.x) * row.r * row.r, 1e-12);
    }
}

TEST(FkProfile, SingleRowMatchesPointEstimate) {
    const WeightedGraph g = generate(complete_spec(10, MeasureKind::counting));
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    const auto rows = fk_profile(g, M, {0}, 0.2, 0.2, [](double) { return 2.0; }, {0.2});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].estimate.a, fk_constant_exact(g, M, 0, 0.2, 2.0).a);
}
