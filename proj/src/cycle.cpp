#include "otto/cycle.hpp"

#include <cmath>

namespace otto {

double coth(double x) {
    if (!(x > 0.0)) throw std::domain_error("coth: argument must be positive");
    // coth(x) = 1 + 2/(e^{2x} - 1); expm1 keeps small x accurate and the
    // overflow of e^{2x} collapses gracefully to the saturation value 1.
    return 1.0 + 2.0 / std::expm1(2.0 * x);
}

double sudden_lambda(double omega_c, double omega_h) {
    if (!(omega_c > 0.0) || !(omega_h > 0.0))
        throw std::domain_error("sudden_lambda: frequencies must be positive");
    return (omega_c * omega_c + omega_h * omega_h) / (2.0 * omega_c * omega_h);
}

namespace {

// The generic energetics path tolerates the degenerate equalities
// omega_h = omega_c and beta_c = beta_h; everything else keeps the
// strict inequalities of validate().
void validate_impl(const CycleParams& p, bool strict) {
    if (!(p.omega_c > 0.0) || !(p.omega_h > 0.0))
        throw std::domain_error("CycleParams: frequencies must be positive");
    if (strict ? !(p.omega_h > p.omega_c) : !(p.omega_h >= p.omega_c))
        throw std::domain_error("CycleParams: omega_h must exceed omega_c");
    if (!(p.beta_h > 0.0) || (strict ? !(p.beta_c > p.beta_h) : !(p.beta_c >= p.beta_h)))
        throw std::domain_error("CycleParams: need beta_c > beta_h > 0");
    if (!(p.r >= 0.0)) throw std::domain_error("CycleParams: squeezing r must be >= 0");
    if (!(p.lambda_AB >= 1.0) || !(p.lambda_CD >= 1.0))
        throw std::domain_error("CycleParams: adiabaticity parameters must be >= 1");
}

}  // namespace

void CycleParams::validate() const { validate_impl(*this, true); }

CycleParams CycleParams::with_config(StrokeConfig cfg) const {
    CycleParams p = *this;
    const double ls = sudden_lambda(omega_c, omega_h);
    switch (cfg) {
        case StrokeConfig::SuddenExpansion:   p.lambda_AB = 1.0; p.lambda_CD = ls; break;
        case StrokeConfig::SuddenCompression: p.lambda_AB = ls;  p.lambda_CD = 1.0; break;
        case StrokeConfig::BothAdiabatic:     p.lambda_AB = 1.0; p.lambda_CD = 1.0; break;
        case StrokeConfig::BothSudden:        p.lambda_AB = ls;  p.lambda_CD = ls; break;
    }
    return p;
}

CornerEnergies corner_energies(const CycleParams& p) {
    validate_impl(p, false);
    const double cold = coth(0.5 * p.beta_c * p.omega_c);
    const double hot = coth(0.5 * p.beta_h * p.omega_h) * std::cosh(2.0 * p.r);
    CornerEnergies e;
    e.h_A = 0.5 * p.omega_c * cold;
    e.h_B = 0.5 * p.omega_h * p.lambda_AB * cold;
    e.h_C = 0.5 * p.omega_h * hot;
    e.h_D = 0.5 * p.omega_c * p.lambda_CD * hot;
    return e;
}

EnergyAccount cycle_energetics(const CycleParams& p) {
    const CornerEnergies e = corner_energies(p);
    EnergyAccount a;
    a.h_A = e.h_A;
    a.h_B = e.h_B;
    a.h_C = e.h_C;
    a.h_D = e.h_D;
    a.q_h = e.h_C - e.h_B;
    a.q_c = e.h_A - e.h_D;
    a.w_ext = a.q_h + a.q_c;
    if (a.q_h > 0.0) a.eta = a.w_ext / a.q_h;
    return a;
}

namespace {

void require_sudden_expansion(const CycleParams& p) {
    validate_impl(p, false);
    const double ls = sudden_lambda(p.omega_c, p.omega_h);
    if (p.lambda_AB != 1.0 || p.lambda_CD != ls)
        throw std::invalid_argument(
            "sudden-expansion form requires lambda_AB = 1, lambda_CD = sudden_lambda");
}

}  // namespace

double sudden_expansion_work_exact(const CycleParams& p) {
    require_sudden_expansion(p);
    const double cold = coth(0.5 * p.beta_c * p.omega_c);
    const double hot = coth(0.5 * p.beta_h * p.omega_h) * std::cosh(2.0 * p.r);
    return (p.omega_h - p.omega_c) / (4.0 * p.omega_h) *
           (hot * (p.omega_c + p.omega_h) - 2.0 * p.omega_h * cold);
}

SuddenExpansionEfficiency sudden_expansion_efficiency_exact(const CycleParams& p) {
    require_sudden_expansion(p);
    const double z = p.omega_c / p.omega_h;
    const double hot = coth(0.5 * p.beta_h * p.omega_h) * std::cosh(2.0 * p.r);
    const double tanh_c = std::tanh(0.5 * p.beta_c * p.omega_c);
    SuddenExpansionEfficiency out;
    out.f1 = 1.0 - z * z;
    out.f2 = (1.0 + z) *
             (hot * (p.omega_c + p.omega_h) / (2.0 * p.omega_h) * tanh_c - 1.0);
    if (out.f2 > 0.0) out.eta = 1.0 / (2.0 / out.f1 + 1.0 / out.f2);
    return out;
}

}  // namespace otto
