// Optimization of the high-temperature work and efficiency over the
// compression ratio z. Efficiency stationarity reduces to a real cubic;
// in the casus-irreducibilis regime (discriminant > 0) its roots come
// from the trigonometric formula, otherwise the single real root is
// taken from the hyperbolic continuation. A grid + golden-section
// numeric maximizer serves as the independent oracle for every closed
// form.

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "otto/ht.hpp"

namespace otto {

struct Cubic {
    double a, b, c, d;  // a y^3 + b y^2 + c y + d = 0, a != 0

    // D = 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27 a^2 d^2.
    // D > 0: three distinct real roots (casus irreducibilis).
    double discriminant() const;

    // Monic coefficients A = b/a, B = c/a, C = d/a.
    double monic_A() const { return b / a; }
    double monic_B() const { return c / a; }
    double monic_C() const { return d / a; }

    double eval(double y) const;

    // Residual |p(y)| scaled by max(1, largest |coefficient|).
    double residual(double y) const;
};

// Principal-branch trigonometric root
//   y = -A/3 + (2/3) sqrt(A^2 - 3B) cos[(1/3) arccos(-(2A^3 - 9AB + 27C)
//                                                    / (2 (A^2-3B)^{3/2}))]
// Requires D > 0 and A^2 - 3B > 0; throws std::domain_error otherwise.
// arccos arguments within 1e-10 outside [-1, 1] are clamped, anything
// further out is a hard error.
double cubic_trig_root(const Cubic& c);

// All real roots, ascending. Three via the trigonometric branches when
// D > 0, otherwise the single real root via cosh/sinh substitution.
std::vector<double> cubic_real_roots(const Cubic& c);

// Stationarity cubic of the sudden-expansion efficiency:
//   2 ch^2 z^3 - 3 tau ch z^2 + tau (2 tau - ch) = 0,  ch = cosh 2r.
Cubic se_efficiency_cubic(double tau, double r);

// Stationarity cubic of the sudden-compression efficiency:
//   ch (2 ch - tau) z^3 - 3 tau ch z + 2 tau^2 = 0.
Cubic sc_efficiency_cubic(double tau, double r);

enum class Objective { MaxWork, MaxEfficiency };

struct Optimum {
    double z_star;         // in (0, 1)
    double value;          // objective value at z_star
    Objective objective;
    StrokeConfig config;
    int branch = 0;        // trig branch index that produced z_star (roots only)
};

// Maximizer of the efficiency over z from the stationarity cubic.
// Throws std::runtime_error with a diagnostic if no root lies in (0, 1).
Optimum optimal_z_efficiency(double tau, double r, StrokeConfig cfg);

// Maximizer of the work, z* = (tau sech 2r)^{1/3}, the same for both
// sudden configurations; the reported value is the work of cfg.
Optimum optimal_z_work(double tau, double r,
                       StrokeConfig cfg = StrokeConfig::SuddenExpansion);

// Upper bound on efficiency (the efficiency at its own maximizer),
// closed form in eta_c = 1 - tau and r.
double eta_upper_bound(double eta_c, double r, StrokeConfig cfg);

// Efficiency at maximum work, closed form in K = [(1-eta_c)/cosh 2r]^{1/3}.
double eta_max_work(double eta_c, double r, StrokeConfig cfg);

// Grid scan (grid_points interior samples of (0,1)) followed by
// golden-section refinement to an interval below 1e-10. The objective
// may return nullopt where undefined; nullopt result means the
// objective is undefined on the whole grid.
std::optional<double> argmax_unit_interval(
    const std::function<std::optional<double>(double)>& objective,
    int grid_points = 10000);

// Independent numeric oracle for the closed-form optima above.
std::optional<Optimum> numeric_argmax(Objective objective, StrokeConfig cfg,
                                      double tau, double r);

}  // namespace otto
