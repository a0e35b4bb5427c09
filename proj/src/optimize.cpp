#include "otto/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace otto {

namespace {

constexpr double kClampSlack = 1e-10;

double clamped_acos(double x) {
    if (x > 1.0) {
        if (x > 1.0 + kClampSlack)
            throw std::domain_error("cubic_trig_root: arccos argument exceeds 1");
        x = 1.0;
    } else if (x < -1.0) {
        if (x < -1.0 - kClampSlack)
            throw std::domain_error("cubic_trig_root: arccos argument below -1");
        x = -1.0;
    }
    return std::acos(x);
}

}  // namespace

double Cubic::discriminant() const {
    return 18.0 * a * b * c * d - 4.0 * b * b * b * d + b * b * c * c -
           4.0 * a * c * c * c - 27.0 * a * a * d * d;
}

double Cubic::eval(double y) const { return ((a * y + b) * y + c) * y + d; }

double Cubic::residual(double y) const {
    const double scale = std::max(
        {1.0, std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d)});
    return std::fabs(eval(y)) / scale;
}

double cubic_trig_root(const Cubic& cub) {
    if (cub.a == 0.0) throw std::domain_error("cubic_trig_root: leading coefficient is zero");
    if (!(cub.discriminant() > 0.0))
        throw std::domain_error("cubic_trig_root: discriminant <= 0, not casus irreducibilis");
    const double A = cub.monic_A(), B = cub.monic_B(), C = cub.monic_C();
    const double q = A * A - 3.0 * B;
    if (!(q > 0.0)) throw std::domain_error("cubic_trig_root: A^2 - 3B must be positive");
    const double arg =
        -(2.0 * A * A * A - 9.0 * A * B + 27.0 * C) / (2.0 * std::pow(q, 1.5));
    return -A / 3.0 + (2.0 / 3.0) * std::sqrt(q) * std::cos(clamped_acos(arg) / 3.0);
}

std::vector<double> cubic_real_roots(const Cubic& cub) {
    if (cub.a == 0.0) throw std::domain_error("cubic_real_roots: leading coefficient is zero");
    const double A = cub.monic_A(), B = cub.monic_B(), C = cub.monic_C();
    // Depressed form t^3 + p t + q with y = t - A/3.
    const double p = B - A * A / 3.0;
    const double q = 2.0 * A * A * A / 27.0 - A * B / 3.0 + C;
    const double shift = -A / 3.0;
    std::vector<double> roots;
    if (cub.discriminant() > 0.0) {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double theta = clamped_acos(3.0 * q / (p * m));
        for (int k = 0; k < 3; ++k)
            roots.push_back(shift + m * std::cos((theta - 2.0 * M_PI * k) / 3.0));
    } else if (p < 0.0) {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double s = q >= 0.0 ? 1.0 : -1.0;
        const double u = -3.0 * std::fabs(q) / (p * m);  // >= 1 here
        roots.push_back(shift - s * m * std::cosh(std::acosh(std::max(1.0, u)) / 3.0));
    } else if (p > 0.0) {
        const double m = 2.0 * std::sqrt(p / 3.0);
        roots.push_back(shift - m * std::sinh(std::asinh(3.0 * q / (p * m)) / 3.0));
    } else {
        roots.push_back(shift + std::cbrt(-q));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Cubic se_efficiency_cubic(double tau, double r) {
    if (!(tau > 0.0) || !(tau < 1.0) || !(r >= 0.0))
        throw std::domain_error("se_efficiency_cubic: need 0 < tau < 1 and r >= 0");
    const double ch = std::cosh(2.0 * r);
    return {2.0 * ch * ch, -3.0 * tau * ch, 0.0, (2.0 * tau - ch) * tau};
}

Cubic sc_efficiency_cubic(double tau, double r) {
    if (!(tau > 0.0) || !(tau < 1.0) || !(r >= 0.0))
        throw std::domain_error("sc_efficiency_cubic: need 0 < tau < 1 and r >= 0");
    const double ch = std::cosh(2.0 * r);
    return {(2.0 * ch - tau) * ch, 0.0, -3.0 * tau * ch, 2.0 * tau * tau};
}

namespace {

std::optional<double> efficiency_at(double z, double tau, double r, StrokeConfig cfg) {
    if (!(z > 0.0) || !(z < 1.0)) return std::nullopt;
    return ht_efficiency({z, tau, r, 1.0}, cfg);
}

}  // namespace

Optimum optimal_z_efficiency(double tau, double r, StrokeConfig cfg) {
    const Cubic cub = (cfg == StrokeConfig::SuddenExpansion)
                          ? se_efficiency_cubic(tau, r)
                          : sc_efficiency_cubic(tau, r);
    std::vector<std::pair<double, int>> candidates;  // (root, branch)
    if (cub.discriminant() > 0.0) {
        // Principal branch first; the shifted branches are fallbacks.
        const double A = cub.monic_A(), B = cub.monic_B(), C = cub.monic_C();
        const double qq = A * A - 3.0 * B;
        const double arg =
            -(2.0 * A * A * A - 9.0 * A * B + 27.0 * C) / (2.0 * std::pow(qq, 1.5));
        const double theta = clamped_acos(arg);
        for (int k = 0; k < 3; ++k)
            candidates.emplace_back(
                -A / 3.0 + (2.0 / 3.0) * std::sqrt(qq) *
                               std::cos((theta - 2.0 * M_PI * k) / 3.0),
                k);
    } else {
        for (double y : cubic_real_roots(cub)) candidates.emplace_back(y, 0);
    }

    Optimum best{0.0, std::numeric_limits<double>::quiet_NaN(),
                 Objective::MaxEfficiency, cfg, 0};
    bool found = false, best_defined = false;
    for (const auto& [z, branch] : candidates) {
        if (!(z > 0.0) || !(z < 1.0)) continue;
        const auto eta = efficiency_at(z, tau, r, cfg);
        if (!found || (eta && (!best_defined || *eta > best.value))) {
            best.z_star = z;
            best.value = eta ? *eta : std::numeric_limits<double>::quiet_NaN();
            best.branch = branch;
            best_defined = eta.has_value();
            found = true;
        }
        if (branch == 0 && eta) break;  // principal branch lands in (0,1): take it
    }
    if (!found)
        throw std::runtime_error(
            "optimal_z_efficiency: no stationary point in (0,1) for tau=" +
            std::to_string(tau) + ", r=" + std::to_string(r) +
            " (parameter regime outside engine operation)");
    return best;
}

Optimum optimal_z_work(double tau, double r, StrokeConfig cfg) {
    if (!(tau > 0.0) || !(tau < 1.0) || !(r >= 0.0))
        throw std::domain_error("optimal_z_work: need 0 < tau < 1 and r >= 0");
    const double z = std::cbrt(tau / std::cosh(2.0 * r));
    return {z, ht_work({z, tau, r, 1.0}, cfg), Objective::MaxWork, cfg, 0};
}

double eta_upper_bound(double eta_c, double r, StrokeConfig cfg) {
    if (!(eta_c > 0.0) || !(eta_c < 1.0) || !(r >= 0.0))
        throw std::domain_error("eta_upper_bound: need 0 < eta_c < 1 and r >= 0");
    const double tau = 1.0 - eta_c;
    const double ch = std::cosh(2.0 * r);
    if (cfg == StrokeConfig::SuddenExpansion) {
        const double sech = 1.0 / ch;
        const double A = optimal_z_efficiency(tau, r, cfg).z_star - 0.5 * tau * sech;
        const double num =
            (0.25 * sech * (1.0 + 2.0 * ch * (1.0 + A) - eta_c) *
                 (2.0 * A * ch + 1.0 - eta_c) -
             2.0 * (1.0 - eta_c)) *
            (sech + 2.0 * (A - 1.0) - eta_c * sech);
        return num / (2.0 * (1.0 - eta_c - 2.0 * A * ch));
    }
    if (cfg == StrokeConfig::SuddenCompression) {
        const double P = std::sqrt((1.0 - eta_c) / (2.0 * ch - 1.0 + eta_c));
        const double B = clamped_acos(-tau / ch / P);
        const double cb = std::cos(B / 3.0), c2b = std::cos(2.0 * B / 3.0);
        const double num =
            (1.0 - 2.0 * cb * P) *
            (-1.0 - 2.0 * cb * P + eta_c * (1.0 + 2.0 * cb * P) +
             ch * (-2.0 - 4.0 * c2b + 4.0 * cb * P));
        return num / ((1.0 + 2.0 * c2b) * (1.0 - eta_c - 2.0 * ch));
    }
    throw std::invalid_argument("eta_upper_bound: sudden-stroke configurations only");
}

double eta_max_work(double eta_c, double r, StrokeConfig cfg) {
    if (!(eta_c > 0.0) || !(eta_c < 1.0) || !(r >= 0.0))
        throw std::domain_error("eta_max_work: need 0 < eta_c < 1 and r >= 0");
    const double ch = std::cosh(2.0 * r);
    const double K = std::cbrt((1.0 - eta_c) / ch);
    if (cfg == StrokeConfig::SuddenExpansion)
        return (ch * (1.0 - 2.0 * K * K) + (1.0 - eta_c) * (3.0 - 2.0 * K)) /
               (2.0 * (1.0 + ch - eta_c));
    if (cfg == StrokeConfig::SuddenCompression)
        return (1.0 - K) * (2.0 * K * K * ch - (1.0 + K) * (1.0 - eta_c)) /
               (2.0 * K * K * ch - (1.0 + K * K) * (1.0 - eta_c));
    throw std::invalid_argument("eta_max_work: sudden-stroke configurations only");
}

std::optional<double> argmax_unit_interval(
    const std::function<std::optional<double>(double)>& objective, int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("argmax_unit_interval: grid too small");
    const double ninf = -std::numeric_limits<double>::infinity();
    auto value = [&](double z) {
        const auto v = objective(z);
        return v ? *v : ninf;
    };

    const double h = 1.0 / (grid_points + 1);
    double best_z = 0.0, best_v = ninf;
    for (int i = 1; i <= grid_points; ++i) {
        const double z = i * h;
        const double v = value(z);
        if (v > best_v) {
            best_v = v;
            best_z = z;
        }
    }
    if (best_v == ninf) return std::nullopt;

    // Golden-section refinement of the bracket around the best grid point.
    constexpr double kGold = 0.6180339887498949;  // (sqrt(5)-1)/2
    double lo = std::max(best_z - h, 1e-15);
    double hi = std::min(best_z + h, 1.0 - 1e-15);
    double x1 = hi - kGold * (hi - lo);
    double x2 = lo + kGold * (hi - lo);
    double f1 = value(x1), f2 = value(x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGold * (hi - lo);
            f2 = value(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGold * (hi - lo);
            f1 = value(x1);
        }
    }
    const double z = 0.5 * (lo + hi);
    const double v = value(z);
    return v > best_v ? z : best_z;
}

std::optional<Optimum> numeric_argmax(Objective objective, StrokeConfig cfg,
                                      double tau, double r) {
    auto f = [&](double z) -> std::optional<double> {
        const HTParams p{z, tau, r, 1.0};
        if (objective == Objective::MaxWork) return ht_work(p, cfg);
        return ht_efficiency(p, cfg);
    };
    const auto z = argmax_unit_interval(f);
    if (!z) return std::nullopt;
    const auto v = f(*z);
    return Optimum{*z, v ? *v : std::numeric_limits<double>::quiet_NaN(),
                   objective, cfg, 0};
}

}  // namespace otto
