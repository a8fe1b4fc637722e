#include <gtest/gtest.h>

#include <cmath>

#include "heatfk/error.hpp"
#include "heatfk/scalars.hpp"

using namespace heatfk;

TEST(Zeta, Examples) {
    EXPECT_EQ(zeta(0.0, 1.0, 1.0), 0.0);
    EXPECT_NEAR(zeta(1.0, 1.0, 1.0), std::asinh(1.0) - (std::sqrt(2.0) - 1), 1e-15);
    EXPECT_NEAR(zeta(1.0, 1.0, 1.0), 0.467160, 1e-6);
    EXPECT_NEAR(2 * 100 * zeta(1.0, 100.0, 1.0), 1.0, 1e-4);
    EXPECT_DOUBLE_EQ(zeta(3.0, 2.0, 0.0), 9.0 / 4.0);
    EXPECT_THROW(zeta(1.0, 0.0, 1.0), DomainError);
}

TEST(Zeta, IsLegendreTransformOfH) {
    for (double S : {0.1, 0.5, 1.0, 2.0})
        for (double rho : {0.0, 0.3, 1.0, 5.0, 40.0})
            for (double t : {0.01, 0.5, 3.0, 100.0}) {
                const double e0 = eta_opt(rho, t, S);
                const double z = zeta(rho, t, S);
                EXPECT_NEAR(z, e0 * rho - t * h_cosh(e0, S), 1e-10 * std::max(1.0, z));
                for (double d : {-1e-3, 1e-3})
                    EXPECT_LE((e0 + d) * rho - t * h_cosh(e0 + d, S), z + 1e-12 * std::max(1.0, z));
            }
}

TEST(Zeta, NonnegativeConvexIncreasing) {
    for (double S : {0.2, 1.0, 3.0})
        for (double t : {0.05, 1.0, 20.0}) {
            const double h = 0.01;
            double prev = -1.0;
            for (int k = 0; k < 400; ++k) {
                const double rho = k * h;
                const double z = zeta(rho, t, S);
                EXPECT_GE(z, 0.0);
                EXPECT_GE(z, prev);
                prev = z;
                if (k > 0) {
                    const double second = zeta(rho + h, t, S) - 2 * z + zeta(rho - h, t, S);
                    EXPECT_GE(second, -1e-10);
                }
            }
        }
}

TEST(Zeta, TaylorEnvelope) {
    for (double S : {0.1, 1.0})
        for (double r : {0.5, 1.0, 4.0})
            for (double f : {10.0, 30.0, 1000.0}) {
                const double t = f * r * S;
                const double q = 2 * t * zeta(r, t, S) / (r * r);
                EXPECT_LE(q, 1.0 + 1e-12);
                EXPECT_GE(q, 1 - r * r * S * S / (10 * t * t) - 1e-12);
            }
}

TEST(HCosh, Examples) {
    EXPECT_EQ(h_cosh(0.0, 1.0), 0.0);
    EXPECT_NEAR(h_cosh(1.0, 1.0), 0.543081, 1e-6);
    EXPECT_NEAR(h_cosh(1.0, 1e-4), 0.5, 1e-7);
    EXPECT_DOUBLE_EQ(h_cosh(2.0, 0.0), 2.0);
    double prev = 0.0;
    for (int k = 1; k < 100; ++k) {
        const double v = h_cosh(0.05 * k, 1.3);
        EXPECT_GT(v, prev);
        prev = v;
    }
}

TEST(Theta, Examples) {
    EXPECT_DOUBLE_EQ(theta(2.0, 288.0, 1.0), 2.0);
    EXPECT_DOUBLE_EQ(theta(2.0, 10.0, 1.0), 2.0);
    EXPECT_LT(theta(2.0, 1e12, 1.0), 0.01);
    double prev = INFINITY;
    for (double r = 1.0; r < 1e8; r *= 3) {
        const double v = theta(1.5, r, 0.7);
        EXPECT_LE(v, prev);
        EXPECT_GT(v, 0.0);
        EXPECT_LE(v, 3.5 / 1.5);
        prev = v;
    }
    EXPECT_NEAR(theta_uncapped(2.0, 288.0 * 16, 1.0), 1.0, 1e-14);
    EXPECT_NEAR(C_theta(1.0), std::cbrt(288.0) * 3, 1e-12);
    EXPECT_NEAR(C_nS(1.0, 8.0), 176 * C_theta(1.0) * 2, 1e-10);
}

TEST(Iota, Examples) {
    EXPECT_NEAR(iota(1.0, std::exp(10.0)), 1 / (2 * (10 - 4 * std::log(10.0))), 1e-12);
    EXPECT_NEAR(iota(1.0, std::exp(10.0)), 0.6332, 1e-4);
    EXPECT_NEAR(iota_from_log(1.0, 10.0), iota(1.0, std::exp(10.0)), 1e-12);
    EXPECT_THROW(iota(1.0, std::exp(2.0)), DomainError);
    EXPECT_EQ(iota_piecewise(1.0, 10.0, 1.0), 0.25);
    EXPECT_NEAR(iota_piecewise(1.0, std::exp(40.0), 1.0), iota(1.0, std::exp(40.0)), 1e-15);
}

TEST(Vartheta, Formula) {
    EXPECT_NEAR(vartheta(1.0, std::exp(8.0), 1.0), C_nS(1.0, 1.0) / std::pow(8.0, 4.0 / 3.0), 1e-10);
    EXPECT_NEAR(vartheta_from_log(2.0, 50.0, 0.5), C_nS(2.0, 0.5) / std::pow(50.0, 1.25), 1e-12);
}

TEST(TauRho, Examples) {
    EXPECT_EQ(tau_rho(1.0, 0.0, 1.0), 0.5);
    const double second = 1.0 / (2 * std::pow(std::asinh(100.0), 2));
    EXPECT_NEAR(tau_rho(1.0, 100.0, 1.0), second, 1e-15);
    EXPECT_LT(second, 0.5);
    double prev = INFINITY;
    for (double rho = 0.0; rho < 50; rho += 0.5) {
        const double v = tau_rho(2.0, rho, 0.8);
        EXPECT_LE(v, prev);
        EXPECT_GT(v, 0.0);
        prev = v;
    }
}

TEST(Corrections, NewPolynomialWithinTwiceOld) {
    for (double S : {0.1, 1.0, 4.0})
        for (double rho = 0.0; rho < 60; rho += 1.7)
            for (double t : {0.01, 0.3, 1.0, 7.0, 300.0})
                EXPECT_LE(poly_correction(rho, t, S), 2 * kr_poly_correction(rho, t, S) * (1 + 1e-9));
    EXPECT_EQ(poly_correction(0.0, 1.0, 1.0), 1.0);
}

TEST(Constants, ProofValues) {
    const double ln2 = std::log(2.0);
    EXPECT_NEAR(log_mv_constant(1.0, 0.5), 80 * ln2, 1e-12);
    EXPECT_NEAR(log_mv_constant(2.0, 3.0), 2 * std::log(3.0) + 113 * ln2, 1e-12);
    EXPECT_NEAR(log_doubling_constant(0.5, 1.0, 2.0), 3 * std::log(2.0) + 12 * std::log(4.0), 1e-12);
    EXPECT_NEAR(log_localreg_constant(0.25, 2.0), std::log(16.0), 1e-14);
    const double ih = log_integrated_heat_constant(1.0, 1.0);
    EXPECT_NEAR(ih, std::max(0.5 * std::log(288.0), log_mv_constant(1.0, 1.0)), 1e-12);
    EXPECT_NEAR(log_gamma_constant(1.0, 1.0), 0.5 * (4 * ln2 + 0.5 * ln2 + ih), 1e-12);
}
