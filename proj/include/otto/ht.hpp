// High-temperature limit of the asymmetric Otto cycle in reduced
// coordinates: compression ratio z = w_c/w_h, temperature ratio
// tau = beta_h/beta_c, squeezing r. All energies carry the overall
// scale 1/beta_h. Closed forms exist for the two sudden-stroke
// configurations only.

#pragma once

#include <optional>

#include "otto/cycle.hpp"

namespace otto {

struct HTParams {
    double z;              // in (0, 1)
    double tau;            // in (0, 1)
    double r;              // >= 0
    double beta_h = 1.0;   // > 0, sets the energy scale

    void validate() const;
    double eta_carnot() const { return 1.0 - tau; }
};

struct HTResult {
    double work;
    double q_h;
    double q_c;
    std::optional<double> efficiency;  // empty when q_h <= 0
};

// Extracted work. cfg must be SuddenExpansion or SuddenCompression;
// other configurations have no high-temperature closed form and throw
// std::invalid_argument.
double ht_work(const HTParams& p, StrokeConfig cfg);

// Heats exchanged with the hot and cold reservoirs. q_h + q_c = ht_work.
struct HTHeats {
    double q_h;
    double q_c;
};
HTHeats ht_heats(const HTParams& p, StrokeConfig cfg);

// Efficiency; empty when the cycle absorbs no heat from the hot
// reservoir (|q_h| below the sign-noise floor counts as undefined).
std::optional<double> ht_efficiency(const HTParams& p, StrokeConfig cfg);

HTResult ht_energetics(const HTParams& p, StrokeConfig cfg);

// z where the sudden-expansion cycle starts producing work,
// z = (sqrt(1 + 8 tau / cosh 2r) - 1) / 2.
double engine_onset_z_se(double tau, double r);

// z where the two configurations extract equal work, z = sqrt(tau sech 2r).
double work_intersection_z(double tau, double r);

// z where the two configurations run at equal efficiency:
// z = [tau ch + sqrt(2 tau ch) (ch - tau)] / [ch (2 ch - tau)], ch = cosh 2r.
double efficiency_intersection_z(double tau, double r);

}  // namespace otto
