#pragma once

// Scalar formulas of the bound statements. Functions prefixed log_ return
// natural logarithms for quantities that leave double range.

namespace heatfk {

// ζ(ρ,t) = (ρ/S)arsinh(ρS/t) − (√(ρ²S²+t²) − t)/S²; ρ²/(2t) at S = 0.
double zeta(double rho, double t, double S);
// h(η) = (cosh(ηS) − 1)/S²; η²/2 at S = 0.
double h_cosh(double eta, double S);
// η₀ = arsinh(ρS/t)/S, the minimizer of −ηρ + t·h(η).
double eta_opt(double rho, double t, double S);

// 1 ∨ (t/S²)arsinh²(ρS/t).
double poly_correction(double rho, double t, double S);
// 1 ∨ (√(t²+ρ²S²) − t)/S², the older correction it is compared against.
double kr_poly_correction(double rho, double t, double S);

// θ(n,r) = (n+2)/n · 1∧(288S/r)^{1/(n+2)}.
double theta(double n, double r, double S);
// C_θ(S/r)^{1/(n+2)} without the cap.
double theta_uncapped(double n, double r, double S);
double C_theta(double n);
double C_nS(double n, double S);

// ι(n,r) = 1/(2 ln(r/(ln r)^{n+3})); DomainError unless r/(ln r)^{n+3} > 1.
double iota(double n, double r);
double iota_from_log(double n, double log_r);
// 1/4 on [8R₁, e^{1∨8R₁}), else 1/(2 ln(r/(ln r)^{p})) with p = n_Q + 3.
double iota_piecewise(double n_Q, double r, double R1);
// ϑ(n,r) = C_{n,S}/(ln r)^{(n+3)/(n+2)}, r > 1.
double vartheta(double n, double r, double S);
double vartheta_from_log(double n, double log_r, double S);

// τ_ρ = τ/2 ∧ S²/(2 arsinh²(ρS/τ)).
double tau_rho(double tau, double rho, double S);

// Constants read off the proofs.
double log_mv_constant(double n, double S);              // (1∨S)^n 2^{2n²+27n+51}
double log_doubling_constant(double a, double n, double S);  // (1∨S)^{n+2}(2/a)^{n²+7n+4}
double log_localreg_constant(double a, double n);        // (4/a)^{n/2}
double log_integrated_heat_constant(double n, double S); // (288S)^{n/2} ∨ mv constant
double log_gamma_constant(double n, double S);           // √(2⁴·2^{n/2}·integrated-heat constant)

} // namespace heatfk
