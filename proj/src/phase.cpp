#include "otto/phase.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace otto {

const char* mode_name(OperationalMode m) {
    switch (m) {
        case OperationalMode::Engine: return "engine";
        case OperationalMode::Refrigerator: return "refrigerator";
        case OperationalMode::Heater: return "heater";
        case OperationalMode::ThermalAccelerator: return "thermal_accelerator";
    }
    return "?";
}

Classification classify(const HTParams& p, StrokeConfig cfg) {
    const HTHeats h = ht_heats(p, cfg);
    const double w = h.q_h + h.q_c;
    const double tol = 1e-14 / p.beta_h;

    const auto ge = [tol](double x) { return x >= -tol; };
    const auto le = [tol](double x) { return x <= tol; };

    Classification out;
    out.w = w;
    out.q_h = h.q_h;
    out.q_c = h.q_c;
    out.on_boundary = std::fabs(w) <= tol || std::fabs(h.q_h) <= tol ||
                      std::fabs(h.q_c) <= tol;

    if (ge(w) && ge(h.q_h) && le(h.q_c))
        out.mode = OperationalMode::Engine;
    else if (le(w) && le(h.q_h) && ge(h.q_c))
        out.mode = OperationalMode::Refrigerator;
    else if (le(w) && le(h.q_h) && le(h.q_c))
        out.mode = OperationalMode::Heater;
    else if (le(w) && ge(h.q_h) && le(h.q_c))
        out.mode = OperationalMode::ThermalAccelerator;
    else
        throw std::logic_error("classify: sign pattern matches no operational mode");
    return out;
}

RegionBoundaries region_boundaries(double tau, double r, StrokeConfig cfg) {
    if (!(tau > 0.0) || !(tau < 1.0) || !(r >= 0.0))
        throw std::domain_error("region_boundaries: need 0 < tau < 1 and r >= 0");
    const double ch = std::cosh(2.0 * r);
    RegionBoundaries out;

    auto add = [&out](double z, const char* what) {
        if (std::isfinite(z) && z > 0.0 && z < 1.0)
            out.thresholds.push_back(z);
        else
            out.dropped.push_back(std::string(what) + " threshold outside (0,1)");
    };

    if (cfg == StrokeConfig::SuddenExpansion) {
        const double ref2 = 2.0 * tau / ch - 1.0;  // refrigerator: z^2 <= this
        if (ref2 > 0.0)
            add(std::sqrt(ref2), "refrigerator/heater");
        else
            out.dropped.push_back("refrigerator region empty (2 tau < cosh 2r)");
        add(tau / ch, "heater/accelerator");
        add(0.5 * (std::sqrt(1.0 + 8.0 * tau / ch) - 1.0), "accelerator/engine");
    } else if (cfg == StrokeConfig::SuddenCompression) {
        add(tau / ch, "refrigerator/heater");
        add(std::sqrt(tau / (2.0 * ch - tau)), "heater/accelerator");
        add(0.25 / ch * (tau + std::sqrt(tau * (tau + 8.0 * ch))), "accelerator/engine");
    } else {
        throw std::invalid_argument("region_boundaries: sudden-stroke configurations only");
    }

    std::sort(out.thresholds.begin(), out.thresholds.end());

    // Label each interval by classifying its midpoint.
    double lo = 0.0;
    for (std::size_t i = 0; i <= out.thresholds.size(); ++i) {
        const double hi = i < out.thresholds.size() ? out.thresholds[i] : 1.0;
        const double mid = 0.5 * (lo + hi);
        out.interval_modes.push_back(classify({mid, tau, r, 1.0}, cfg).mode);
        lo = hi;
    }
    return out;
}

double PhaseMap::z_at(std::size_t j) const {
    return grid.z_min + (j + 0.5) * (grid.z_max - grid.z_min) / grid.nz;
}

double PhaseMap::tau_at(std::size_t i) const {
    return grid.tau_min + (i + 0.5) * (grid.tau_max - grid.tau_min) / grid.ntau;
}

double PhaseMap::area_fraction(OperationalMode m) const {
    const auto n = std::count(modes.begin(), modes.end(), m);
    return static_cast<double>(n) / static_cast<double>(modes.size());
}

PhaseMap rasterize(const GridSpec& grid, double r, StrokeConfig cfg, double beta_h) {
    if (grid.nz < 2 || grid.ntau < 2)
        throw std::invalid_argument("rasterize: grid resolution must be >= 2");
    if (!(grid.z_min >= 0.0) || !(grid.z_max <= 1.0) || !(grid.z_min < grid.z_max) ||
        !(grid.tau_min >= 0.0) || !(grid.tau_max <= 1.0) ||
        !(grid.tau_min < grid.tau_max))
        throw std::invalid_argument("rasterize: ranges must be ordered and within [0,1]");

    PhaseMap map;
    map.grid = grid;
    map.r = r;
    map.config = cfg;
    const std::size_t n = grid.nz * grid.ntau;
    map.modes.resize(n);
    map.w.resize(n);
    map.q_h.resize(n);
    map.q_c.resize(n);

    for (std::size_t i = 0; i < grid.ntau; ++i) {
        const double tau = map.tau_at(i);
        for (std::size_t j = 0; j < grid.nz; ++j) {
            const Classification c = classify({map.z_at(j), tau, r, beta_h}, cfg);
            const std::size_t k = map.index(i, j);
            map.modes[k] = c.mode;
            map.w[k] = c.w;
            map.q_h[k] = c.q_h;
            map.q_c[k] = c.q_c;
        }
    }
    return map;
}

}  // namespace otto
