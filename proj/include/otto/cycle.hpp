// Finite-temperature energetics of the asymmetric harmonic Otto cycle
// with a hot squeezed thermal reservoir (units: hbar = k_B = 1).
//
// The cycle runs A -> B (compression), B -> C (hot isochore), C -> D
// (expansion), D -> A (cold isochore). Nonadiabatic driving of a work
// stroke is captured by an adiabaticity parameter lambda >= 1, with
// lambda = 1 for quasistatic driving and
// lambda = (w_c^2 + w_h^2) / (2 w_c w_h) for a sudden frequency quench.

#pragma once

#include <optional>
#include <stdexcept>

namespace otto {

// coth(x) for x > 0, stable for both tiny and huge arguments.
// For 2x beyond the exp overflow threshold this saturates to 1.
double coth(double x);

enum class StrokeConfig {
    SuddenExpansion,    // A->B adiabatic, C->D sudden
    SuddenCompression,  // A->B sudden,   C->D adiabatic
    BothAdiabatic,
    BothSudden,
};

// Adiabaticity parameter of a sudden frequency quench between w_c and w_h.
// Always >= 1, with equality iff the frequencies coincide.
double sudden_lambda(double omega_c, double omega_h);

struct CycleParams {
    double omega_c;    // cold-side frequency, > 0
    double omega_h;    // hot-side frequency, > omega_c
    double beta_c;     // cold inverse temperature, > beta_h
    double beta_h;     // hot inverse temperature, > 0
    double r;          // squeezing of the hot reservoir, >= 0
    double lambda_AB;  // adiabaticity of the compression stroke, >= 1
    double lambda_CD;  // adiabaticity of the expansion stroke, >= 1

    // Throws std::domain_error on any violated invariant.
    void validate() const;

    // Same frequencies/temperatures/squeezing with the stroke lambdas
    // set from a named configuration.
    CycleParams with_config(StrokeConfig cfg) const;
};

// Per-cycle energy bookkeeping. Sign convention: q_h = h_C - h_B,
// q_c = h_A - h_D, w_ext = q_h + q_c; eta = w_ext / q_h is populated
// only when q_h > 0.
struct EnergyAccount {
    double h_A, h_B, h_C, h_D;
    double q_h;
    double q_c;
    double w_ext;
    std::optional<double> eta;
};

struct CornerEnergies {
    double h_A, h_B, h_C, h_D;
};

// Mean oscillator energies at the four cycle corners.
CornerEnergies corner_energies(const CycleParams& p);

// Heats, work, and (when q_h > 0) efficiency for one full cycle.
EnergyAccount cycle_energetics(const CycleParams& p);

// Closed-form work for the sudden-expansion configuration. Requires
// lambda_AB = 1 and lambda_CD = sudden_lambda; throws std::invalid_argument
// otherwise. Agrees with cycle_energetics().w_ext to machine precision.
double sudden_expansion_work_exact(const CycleParams& p);

// Efficiency of the sudden-expansion configuration as 1/(2/f1 + 1/f2).
// f1 = 1 - (w_c/w_h)^2 lies in (0,1); f2 > 0 is the positive work
// condition, so eta < f1/2 < 1/2 and eta < f2 whenever the engine runs.
struct SuddenExpansionEfficiency {
    double f1;
    double f2;
    std::optional<double> eta;  // empty when f2 <= 0 (PWC violated)
};

SuddenExpansionEfficiency sudden_expansion_efficiency_exact(const CycleParams& p);

}  // namespace otto
