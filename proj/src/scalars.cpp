#include "heatfk/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heatfk/error.hpp"

namespace heatfk {

namespace {

// g(x) = x·arsinh(x) − (√(1+x²) − 1), via its Taylor series near zero.
double zeta_core(double x) {
    if (std::abs(x) < 1e-2) {
        const double x2 = x * x;
        return x2 * (0.5 + x2 * (-1.0 / 24.0 + x2 * (1.0 / 80.0 - x2 * (5.0 / 896.0))));
    }
    return x * std::asinh(x) - x * x / (std::sqrt(1.0 + x * x) + 1.0);
}

void require_positive(double v, const char* what) {
    if (!(v > 0)) throw DomainError(std::string(what) + " must be positive");
}

} // namespace

double zeta(double rho, double t, double S) {
    require_positive(t, "t");
    if (rho < 0) throw DomainError("rho must be nonnegative");
    if (S == 0.0) return rho * rho / (2.0 * t);
    const double x = rho * S / t;
    return t / (S * S) * zeta_core(x);
}

double h_cosh(double eta, double S) {
    if (S == 0.0) return 0.5 * eta * eta;
    const double s = std::sinh(0.5 * eta * S);
    return 2.0 * s * s / (S * S);
}

double eta_opt(double rho, double t, double S) {
    require_positive(t, "t");
    if (S == 0.0) return rho / t;
    return std::asinh(rho * S / t) / S;
}

double poly_correction(double rho, double t, double S) {
    require_positive(t, "t");
    if (S == 0.0) return std::max(1.0, rho * rho / t);
    const double a = std::asinh(rho * S / t);
    return std::max(1.0, t / (S * S) * a * a);
}

double kr_poly_correction(double rho, double t, double S) {
    require_positive(t, "t");
    if (S == 0.0) return std::max(1.0, rho * rho / (2.0 * t));
    const double rs = rho * S;
    // √(t²+ρ²S²) − t without cancellation.
    const double d = rs * rs / (std::hypot(t, rs) + t);
    return std::max(1.0, d / (S * S));
}

double theta(double n, double r, double S) {
    require_positive(n, "n");
    require_positive(r, "r");
    return (n + 2.0) / n * std::min(1.0, std::pow(288.0 * S / r, 1.0 / (n + 2.0)));
}

double theta_uncapped(double n, double r, double S) {
    require_positive(n, "n");
    require_positive(r, "r");
    return C_theta(n) * std::pow(S / r, 1.0 / (n + 2.0));
}

double C_theta(double n) {
    require_positive(n, "n");
    return std::pow(288.0, 1.0 / (n + 2.0)) * (n + 2.0) / n;
}

double C_nS(double n, double S) { return 176.0 * C_theta(n) * std::pow(S, 1.0 / (n + 2.0)); }

double iota_from_log(double n, double log_r) {
    if (!(log_r > 0)) throw DomainError("iota needs r > 1");
    const double L = log_r - (n + 3.0) * std::log(log_r);
    if (!(L > 0)) throw DomainError("iota needs r/(ln r)^{n+3} > 1");
    return 1.0 / (2.0 * L);
}

double iota(double n, double r) {
    require_positive(r, "r");
    return iota_from_log(n, std::log(r));
}

double iota_piecewise(double n_Q, double r, double R1) {
    if (r < 8.0 * R1) throw DomainError("piecewise iota is defined for r >= 8 R1");
    const double switch_log = std::max(1.0, 8.0 * R1);
    if (std::log(r) < switch_log) return 0.25;
    return iota_from_log(n_Q, std::log(r));
}

double vartheta_from_log(double n, double log_r, double S) {
    if (!(log_r > 0)) throw DomainError("vartheta needs r > 1");
    return C_nS(n, S) / std::pow(log_r, (n + 3.0) / (n + 2.0));
}

double vartheta(double n, double r, double S) {
    require_positive(r, "r");
    return vartheta_from_log(n, std::log(r), S);
}

double tau_rho(double tau, double rho, double S) {
    require_positive(tau, "tau");
    const double half = 0.5 * tau;
    if (rho == 0.0) return half;
    if (S == 0.0) return std::min(half, tau * tau / (2.0 * rho * rho));
    const double a = std::asinh(rho * S / tau);
    return std::min(half, S * S / (2.0 * a * a));
}

double log_mv_constant(double n, double S) {
    return n * std::log(std::max(1.0, S)) + (2.0 * n * n + 27.0 * n + 51.0) * std::log(2.0);
}

double log_doubling_constant(double a, double n, double S) {
    require_positive(a, "a");
    return (n + 2.0) * std::log(std::max(1.0, S)) + (n * n + 7.0 * n + 4.0) * std::log(2.0 / a);
}

double log_localreg_constant(double a, double n) {
    require_positive(a, "a");
    return 0.5 * n * std::log(4.0 / a);
}

double log_integrated_heat_constant(double n, double S) {
    const double first = S > 0 ? 0.5 * n * std::log(288.0 * S) : -std::numeric_limits<double>::infinity();
    return std::max(first, log_mv_constant(n, S));
}

double log_gamma_constant(double n, double S) {
    return 0.5 * (4.0 * std::log(2.0) + 0.5 * n * std::log(2.0) + log_integrated_heat_constant(n, S));
}

} // namespace heatfk
