// Operational-mode classification of the cycle in the high-temperature
// regime and rasterization of full (z, tau) phase diagrams.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "otto/ht.hpp"

namespace otto {

enum class OperationalMode { Engine, Refrigerator, Heater, ThermalAccelerator };

const char* mode_name(OperationalMode m);

struct Classification {
    OperationalMode mode;
    bool on_boundary;  // some sign test fell inside the zero tolerance
    double w;
    double q_h;
    double q_c;
};

// Mode from the signs of (W, Q_h, Q_c):
//   Engine:             W >= 0, Q_h >= 0, Q_c <= 0
//   Refrigerator:       W <= 0, Q_h <= 0, Q_c >= 0
//   Heater:             W <= 0, Q_h <= 0, Q_c <= 0
//   ThermalAccelerator: W <= 0, Q_h >= 0, Q_c <= 0
// Quantities within 1e-14/beta_h of zero count for either sign; ties go
// to the first matching mode in the order above. The four patterns are
// exhaustive (Q_h > 0 and Q_c > 0 cannot hold together); if none
// matches the function throws instead of mislabeling.
Classification classify(const HTParams& p, StrokeConfig cfg);

// Analytic z-thresholds between modes at fixed (tau, r), ascending.
// interval_modes[i] labels (thresholds[i-1], thresholds[i]); there is
// one more interval than thresholds, covering (0, 1). Thresholds that
// are non-real or fall outside (0, 1) are dropped and noted.
struct RegionBoundaries {
    std::vector<double> thresholds;
    std::vector<OperationalMode> interval_modes;
    std::vector<std::string> dropped;
};

RegionBoundaries region_boundaries(double tau, double r, StrokeConfig cfg);

struct GridSpec {
    std::size_t nz = 512;
    std::size_t ntau = 512;
    double z_min = 0.0, z_max = 1.0;      // cells sample open-interval centers
    double tau_min = 0.0, tau_max = 1.0;
};

// Dense mode raster; row-major with tau as the row (vertical) axis and
// z as the column axis. Cell (i, j) samples the center of the j-th z
// interval and i-th tau interval.
struct PhaseMap {
    GridSpec grid;
    double r;
    StrokeConfig config;
    std::vector<OperationalMode> modes;  // ntau * nz, row-major
    std::vector<double> w, q_h, q_c;

    std::size_t index(std::size_t i_tau, std::size_t j_z) const {
        return i_tau * grid.nz + j_z;
    }
    double z_at(std::size_t j) const;
    double tau_at(std::size_t i) const;

    // Fraction of cells in a given mode.
    double area_fraction(OperationalMode m) const;
};

PhaseMap rasterize(const GridSpec& grid, double r, StrokeConfig cfg,
                   double beta_h = 1.0);

}  // namespace otto
