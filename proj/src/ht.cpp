#include "otto/ht.hpp"

#include <cmath>
#include <stdexcept>

namespace otto {

namespace {

constexpr double kSignNoise = 1e-14;  // relative to the 1/beta_h scale

void require_sudden(StrokeConfig cfg) {
    if (cfg != StrokeConfig::SuddenExpansion && cfg != StrokeConfig::SuddenCompression)
        throw std::invalid_argument(
            "high-temperature closed forms exist only for the sudden-stroke configurations");
}

}  // namespace

void HTParams::validate() const {
    if (!(z > 0.0) || !(z < 1.0)) throw std::domain_error("HTParams: need 0 < z < 1");
    if (!(tau > 0.0) || !(tau < 1.0)) throw std::domain_error("HTParams: need 0 < tau < 1");
    if (!(r >= 0.0)) throw std::domain_error("HTParams: need r >= 0");
    if (!(beta_h > 0.0)) throw std::domain_error("HTParams: need beta_h > 0");
}

double ht_work(const HTParams& p, StrokeConfig cfg) {
    p.validate();
    require_sudden(cfg);
    const double ch = std::cosh(2.0 * p.r);
    const double z = p.z, tau = p.tau;
    if (cfg == StrokeConfig::SuddenExpansion)
        return (1.0 - z) / (2.0 * z * p.beta_h) * (z * (1.0 + z) * ch - 2.0 * tau);
    return (1.0 - z) / (2.0 * z * z * p.beta_h) * (2.0 * z * z * ch - tau * (1.0 + z));
}

HTHeats ht_heats(const HTParams& p, StrokeConfig cfg) {
    p.validate();
    require_sudden(cfg);
    const double ch = std::cosh(2.0 * p.r);
    const double z = p.z, tau = p.tau, s = 1.0 / p.beta_h;
    if (cfg == StrokeConfig::SuddenExpansion)
        return {s * (ch - tau / z), s * (tau - 0.5 * ch * (1.0 + z * z))};
    return {s * (ch - 0.5 * tau * (1.0 + 1.0 / (z * z))), s * (tau - z * ch)};
}

std::optional<double> ht_efficiency(const HTParams& p, StrokeConfig cfg) {
    const HTHeats h = ht_heats(p, cfg);
    if (h.q_h <= kSignNoise / p.beta_h) return std::nullopt;
    return (h.q_h + h.q_c) / h.q_h;
}

HTResult ht_energetics(const HTParams& p, StrokeConfig cfg) {
    const HTHeats h = ht_heats(p, cfg);
    HTResult out;
    out.q_h = h.q_h;
    out.q_c = h.q_c;
    out.work = h.q_h + h.q_c;
    if (h.q_h > kSignNoise / p.beta_h) out.efficiency = out.work / h.q_h;
    return out;
}

double engine_onset_z_se(double tau, double r) {
    return 0.5 * (std::sqrt(1.0 + 8.0 * tau / std::cosh(2.0 * r)) - 1.0);
}

double work_intersection_z(double tau, double r) {
    return std::sqrt(tau / std::cosh(2.0 * r));
}

double efficiency_intersection_z(double tau, double r) {
    const double ch = std::cosh(2.0 * r);
    return (tau * ch + std::sqrt(2.0 * tau * ch) * (ch - tau)) / (ch * (2.0 * ch - tau));
}

}  // namespace otto
