#include <gtest/gtest.h>

#include <cmath>

#include "heatfk/error.hpp"
#include "heatfk/families.hpp"
#include "heatfk/metric.hpp"

using namespace heatfk;

namespace {

WeightedGraph path(int n, MeasureKind kind = MeasureKind::counting) { return generate(path_spec(n, kind)); }

} // namespace

TEST(Metric, CombinatorialOnNormalizingIsIntrinsic) {
    const WeightedGraph g = generate(box_spec(2, 3, MeasureKind::normalizing));
    const auto M = IntrinsicMetric::build(g, MetricRule::combinatorial);
    EXPECT_TRUE(M.intrinsic());
    EXPECT_EQ(M.jump_size(), 1.0);
    for (double s : check_intrinsic(g, M)) EXPECT_NEAR(s, 0.0, 1e-14);
}

TEST(Metric, TwoVerticesDegreePath) {
    const WeightedGraph g = generate(complete_spec(2, MeasureKind::counting));
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    EXPECT_DOUBLE_EQ(M(0, 1), 1.0);
    EXPECT_DOUBLE_EQ(M.jump_size(), 1.0);
    for (double s : check_intrinsic(g, M)) EXPECT_DOUBLE_EQ(s, 0.0);
}

TEST(Metric, SingleVertex) {
    const WeightedGraph g = make_graph({"a"}, {}, MeasureKind::counting);
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    EXPECT_EQ(M.size(), 1u);
    EXPECT_EQ(M(0, 0), 0.0);
    EXPECT_EQ(M.jump_size(), 0.0);
}

TEST(Metric, DisconnectedThrows) {
    const WeightedGraph g = make_graph({"a", "b", "c"}, {{0, 1, 1.0}}, MeasureKind::counting);
    EXPECT_THROW(IntrinsicMetric::build(g, MetricRule::degree_path), DomainError);
}

TEST(Metric, CombinatorialOnCountingPathCenterNotIntrinsic) {
    const WeightedGraph g = path(3);
    const auto M = IntrinsicMetric::build(g, MetricRule::combinatorial);
    EXPECT_DOUBLE_EQ(check_intrinsic(g, M)[1], -1.0);
    EXPECT_FALSE(M.intrinsic());
}

TEST(Metric, ScalingIncreasesSlack) {
    const WeightedGraph g = generate(random_spec(24, 0.3, 0.5, 2.0, 7, MeasureKind::counting));
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    const auto Ms = M.scaled(g, 0.5);
    const auto a = check_intrinsic(g, M), b = check_intrinsic(g, Ms);
    for (std::size_t x = 0; x < a.size(); ++x) EXPECT_GT(b[x], a[x]);
    EXPECT_DOUBLE_EQ(Ms.jump_size(), 0.5 * M.jump_size());
}

TEST(Metric, BallExamples) {
    const WeightedGraph g = path(5);
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    EXPECT_EQ(ball(M, 2, 0.0).items(), std::vector<Vertex>{2});
    EXPECT_DOUBLE_EQ(ball_volume(g, M, 2, 0.0), 1.0);
    EXPECT_EQ(ball(M, 2, 0.71).items(), (std::vector<Vertex>{1, 2, 3}));
    EXPECT_EQ(ball(M, 2, M.diameter()).size(), 5u);
    EXPECT_NEAR(M(0, 1), std::sqrt(0.5), 1e-15);
    // Closed ball at an exact stored distance, open ball excludes it.
    EXPECT_EQ(ball_size(M, 2, M(2, 3)), 3u);
    EXPECT_DOUBLE_EQ(open_ball_volume(g, M, 2, M(2, 3)), 1.0);
}

TEST(Metric, BallMonotone) {
    for (const auto& s : catalogue()) {
        const WeightedGraph g = generate(s.spec);
        const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
        for (Vertex x = 0; x < g.size(); x += 3) {
            double prev = 0.0;
            std::size_t prev_n = 0;
            for (double r : ball_radii(M, x)) {
                const double v = ball_volume(g, M, x, r);
                EXPECT_GT(v, prev);
                EXPECT_GT(ball_size(M, x, r), prev_n);
                EXPECT_TRUE(ball(M, x, 0.5 * r).is_subset_of(ball(M, x, r)));
                // Right-continuity: a slightly larger radius adds nothing new.
                EXPECT_EQ(ball_volume(g, M, x, r * (1 + 1e-12)), v);
                prev = v;
                prev_n = ball_size(M, x, r);
            }
        }
    }
}

TEST(Metric, TriangleAndIntrinsicOnCatalogue) {
    for (const auto& s : catalogue()) {
        const WeightedGraph g = generate(s.spec);
        const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
        EXPECT_LE(triangle_violation(M), 1e-12) << s.name;
        EXPECT_TRUE(M.intrinsic()) << s.name;
        for (double sl : check_intrinsic(g, M)) EXPECT_GE(sl, -1e-12) << s.name;
        double S = 0.0;
        for (const Edge& e : g.edges()) S = std::max(S, M(e.u, e.v));
        EXPECT_DOUBLE_EQ(M.jump_size(), S) << s.name;
        for (Vertex x = 0; x < g.size(); ++x) {
            EXPECT_EQ(M(x, x), 0.0);
            for (Vertex y = 0; y < g.size(); ++y) EXPECT_EQ(M(x, y), M(y, x));
        }
    }
}

TEST(Metric, SerialEqualsParallel) {
    const WeightedGraph g = generate(box_spec(2, 8, MeasureKind::counting));
    const auto a = IntrinsicMetric::build(g, MetricRule::degree_path, Exec::serial);
    const auto b = IntrinsicMetric::build(g, MetricRule::degree_path, Exec::parallel);
    EXPECT_TRUE(a.table() == b.table());
}

TEST(Cutoff, ValuesAndGradientBound) {
    const WeightedGraph p = path(9);
    const auto Mp = IntrinsicMetric::build(p, MetricRule::combinatorial);
    const auto phi = cutoff(Mp, VertexSubset({4}), 4.0);
    EXPECT_EQ(phi[4], 1.0);
    EXPECT_EQ(phi[2], 0.5);
    EXPECT_EQ(phi[0], 0.0);
    EXPECT_THROW(cutoff(Mp, VertexSubset({4}), 0.0), DomainError);

    for (const auto& s : catalogue()) {
        const WeightedGraph g = generate(s.spec);
        const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
        for (double R : {0.3, 1.0, 2.5, 7.0}) {
            const VertexSubset A({0});
            const auto f = cutoff(M, A, R);
            for (Vertex x = 0; x < g.size(); ++x) {
                EXPECT_GE(f[x], 0.0);
                EXPECT_LE(f[x], 1.0);
                if (M(0, x) >= R) EXPECT_EQ(f[x], 0.0);
            }
            EXPECT_EQ(f[0], 1.0);
            EXPECT_LE(gradient_sup_sq(g, f), 1.0 / (R * R) + 1e-12) << s.name;
        }
    }
}

TEST(Tent, ValuesAndRayleighBound) {
    const WeightedGraph g = path(21);
    const auto M = IntrinsicMetric::build(g, MetricRule::degree_path);
    const double S = M.jump_size();
    const Vertex o = 10;
    EXPECT_THROW(tent_function(M, o, S, S), DomainError);
    for (double r = 2 * S; r <= 8.0; r += 0.37) {
        const auto phi = tent_function(M, o, r, S);
        EXPECT_DOUBLE_EQ(phi[o], r - S);
        for (Vertex x = 0; x < g.size(); ++x) {
            if (M(o, x) > r - S) EXPECT_EQ(phi[x], 0.0);
            if (M(o, x) <= (r - S) / 2) EXPECT_GE(phi[x], (r - S) / 2);
        }
        const double bound = (4 / r) * (4 / r) * ball_volume(g, M, o, r) / ball_volume(g, M, o, r / 4);
        EXPECT_LE(gradient_quotient(g, phi), bound) << "r=" << r;
    }
}
