// Acceptance suite: one check per release criterion, each printed as a
// single pass/fail line. Exits non-zero if any criterion fails.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "otto/cycle.hpp"
#include "otto/ht.hpp"
#include "otto/optimize.hpp"
#include "otto/phase.hpp"
#include "otto/random.hpp"

using namespace otto;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %-34s %s\n", pass ? "PASS" : "FAIL", id,
                name.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}

// 1. Sudden-expansion efficiency below one half, exact and
//    high-temperature paths, >= 1e5 draws each, zero violations.
void criterion_half_bound() {
    UniformRng rng(101);
    double max_eta = 0.0;
    long checked = 0;
    for (int i = 0; i < 100000; ++i) {
        const HTParams p{rng.uniform(1e-6, 1.0 - 1e-6), rng.uniform(1e-6, 1.0 - 1e-6),
                         rng.uniform(0.0, 3.0), 1.0};
        const auto eta = ht_efficiency(p, StrokeConfig::SuddenExpansion);
        if (eta && *eta > 0.0) {
            max_eta = std::max(max_eta, *eta);
            ++checked;
        }
    }
    for (int i = 0; i < 100000; ++i) {
        CycleParams p{};
        p.omega_c = rng.uniform(0.05, 5.0);
        p.omega_h = p.omega_c + rng.uniform(1e-4, 5.0);
        p.beta_h = rng.uniform(0.01, 3.0);
        p.beta_c = p.beta_h + rng.uniform(1e-4, 3.0);
        p.r = rng.uniform(0.0, 3.0);
        const auto eff = sudden_expansion_efficiency_exact(
            p.with_config(StrokeConfig::SuddenExpansion));
        const auto acct = cycle_energetics(p.with_config(StrokeConfig::SuddenExpansion));
        if (eff.eta && acct.w_ext > 0.0) {
            max_eta = std::max(max_eta, *eff.eta);
            ++checked;
        }
    }
    report(1, "SE half bound", max_eta < 0.5 && checked > 0,
           "max eta=" + fmt("%.6f", max_eta) + " over " + std::to_string(checked) +
               " engine draws");
}

// 2. Closed-form optima agree with the numeric argmax oracle.
void criterion_optima() {
    UniformRng rng(42);
    double max_dz = 0.0, max_dv = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double tau = rng.uniform(0.05, 0.95);
        const double r = rng.uniform(0.0, 2.0);
        for (auto cfg : {StrokeConfig::SuddenExpansion, StrokeConfig::SuddenCompression}) {
            for (auto obj : {Objective::MaxWork, Objective::MaxEfficiency}) {
                const Optimum a = obj == Objective::MaxWork
                                      ? optimal_z_work(tau, r, cfg)
                                      : optimal_z_efficiency(tau, r, cfg);
                const auto n = numeric_argmax(obj, cfg, tau, r);
                if (!n) continue;
                max_dz = std::max(max_dz, std::fabs(a.z_star - n->z_star));
                if (!std::isnan(a.value))
                    max_dv = std::max(max_dv, std::fabs(a.value - n->value));
            }
        }
    }
    report(2, "closed-form optima vs oracle", max_dz < 1e-6 && max_dv < 1e-9,
           "max|dz|=" + fmt("%.2e", max_dz) + " max|dvalue|=" + fmt("%.2e", max_dv));
}

// 3. Trigonometric roots satisfy their cubics; SC discriminant positive.
void criterion_cubics() {
    UniformRng rng(42);
    double max_res = 0.0, min_disc = 1e300;
    for (int i = 0; i < 100; ++i) {
        const double tau = rng.uniform(0.05, 0.95);
        const double r = rng.uniform(0.0, 2.0);
        const Cubic sc = sc_efficiency_cubic(tau, r);
        min_disc = std::min(min_disc, sc.discriminant());
        max_res = std::max(max_res, sc.residual(cubic_trig_root(sc)));
        const Cubic se = se_efficiency_cubic(tau, r);
        if (se.discriminant() > 0.0)
            max_res = std::max(max_res, se.residual(cubic_trig_root(se)));
    }
    report(3, "cubic residuals", max_res < 1e-9 && min_disc > 0.0,
           "max residual=" + fmt("%.2e", max_res) +
               " min SC discriminant=" + fmt("%.2e", min_disc));
}

// 4. eta_up - eta_mw never negative beyond -1e-12.
void criterion_bound_ordering() {
    double min_delta = 1e300;
    for (double eta_c : {0.4, 0.8})
        for (int k = 0; k <= 300; ++k)
            for (auto cfg :
                 {StrokeConfig::SuddenExpansion, StrokeConfig::SuddenCompression})
                min_delta =
                    std::min(min_delta, eta_upper_bound(eta_c, 0.01 * k, cfg) -
                                            eta_max_work(eta_c, 0.01 * k, cfg));
    report(4, "bound ordering eta_up >= eta_mw", min_delta >= -1e-12,
           "min delta=" + fmt("%.2e", min_delta));
}

// 5. Work and efficiency curves of the two configurations intersect at
//    their analytic points for tau = 0.16, r in {0, 0.5, 1}.
void criterion_intersections() {
    const double tau = 0.16;
    double max_dw = 0.0, max_de = 0.0;
    bool defined = true;
    for (double r : {0.0, 0.5, 1.0}) {
        const HTParams pw{work_intersection_z(tau, r), tau, r, 1.0};
        max_dw = std::max(max_dw, std::fabs(ht_work(pw, StrokeConfig::SuddenExpansion) -
                                            ht_work(pw, StrokeConfig::SuddenCompression)));
        const HTParams pe{efficiency_intersection_z(tau, r), tau, r, 1.0};
        const auto se = ht_efficiency(pe, StrokeConfig::SuddenExpansion);
        const auto sc = ht_efficiency(pe, StrokeConfig::SuddenCompression);
        if (!se || !sc) {
            defined = false;
            continue;
        }
        max_de = std::max(max_de, std::fabs(*se - *sc));
    }
    report(5, "SE/SC intersections", defined && max_dw < 1e-10 && max_de < 1e-10,
           "max|dW|=" + fmt("%.2e", max_dw) + " max|deta|=" + fmt("%.2e", max_de));
}

// 6. Sudden-expansion work changes sign within one 1e-5 step of the
//    analytic onset for 50 random (tau, r).
void criterion_pwc_boundary() {
    UniformRng rng(66);
    const double step = 1e-5;
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
        const double tau = rng.uniform(0.05, 0.95);
        const double r = rng.uniform(0.0, 2.0);
        const double z0 = engine_onset_z_se(tau, r);
        if (!(z0 - step > 0.0 && z0 + step < 1.0)) {
            ok = false;
            continue;
        }
        const double lo = ht_work({z0 - step, tau, r, 1.0}, StrokeConfig::SuddenExpansion);
        const double hi = ht_work({z0 + step, tau, r, 1.0}, StrokeConfig::SuddenExpansion);
        ok = ok && lo < 0.0 && hi > 0.0;
    }
    report(6, "PWC boundary sign change", ok, "50 draws, step 1e-5");
}

// 7. Phase maps: exhaustive sign patterns, boundaries within one cell,
//    monotone engine/refrigerator shares, both configurations.
void criterion_phase_maps() {
    bool patterns_ok = true, boundary_ok = true, monotone_ok = true;
    for (auto cfg : {StrokeConfig::SuddenExpansion, StrokeConfig::SuddenCompression}) {
        double prev_eng = -1.0, prev_ref = 2.0;
        for (double r : {0.1, 0.3, 0.5}) {
            PhaseMap map;
            try {
                map = rasterize({512, 512}, r, cfg);  // classify throws on any
            } catch (const std::exception&) {         // unmatched sign pattern
                patterns_ok = false;
                continue;
            }
            const double eng = map.area_fraction(OperationalMode::Engine);
            const double ref = map.area_fraction(OperationalMode::Refrigerator);
            monotone_ok = monotone_ok && eng > prev_eng && ref < prev_ref;
            prev_eng = eng;
            prev_ref = ref;

            // analytic thresholds vs the raster's empirical transitions
            const double cell = 1.0 / 512;
            for (std::size_t i = 0; i < map.grid.ntau; i += 37) {
                const auto rb = region_boundaries(map.tau_at(i), r, cfg);
                std::vector<double> transitions;
                for (std::size_t j = 1; j < map.grid.nz; ++j)
                    if (map.modes[map.index(i, j)] != map.modes[map.index(i, j - 1)])
                        transitions.push_back(0.5 * (map.z_at(j - 1) + map.z_at(j)));
                // thresholds below the first cell center cannot appear in the raster
                std::vector<double> expected;
                for (double t : rb.thresholds)
                    if (t > map.z_at(0) && t < map.z_at(map.grid.nz - 1))
                        expected.push_back(t);
                // two thresholds inside one cell merge into a single raster
                // transition, so match each point to its nearest partner
                auto near_some = [cell](double x, const std::vector<double>& ys) {
                    for (double y : ys)
                        if (std::fabs(x - y) <= cell) return true;
                    return false;
                };
                for (double t : expected)
                    boundary_ok = boundary_ok && near_some(t, transitions);
                for (double t : transitions)
                    boundary_ok = boundary_ok && near_some(t, expected);
            }
        }
    }
    report(7, "phase-map structure", patterns_ok && boundary_ok && monotone_ok,
           std::string("patterns=") + (patterns_ok ? "ok" : "bad") +
               " boundaries=" + (boundary_ok ? "ok" : "bad") +
               " monotone=" + (monotone_ok ? "ok" : "bad"));
}

// 8. Large squeezing: SC efficiency bound above 0.9 at r = 10 (closed
//    form and oracle); non-engine raster share below 5% at r = 5.
void criterion_large_squeezing() {
    const double closed = eta_upper_bound(0.8, 10.0, StrokeConfig::SuddenCompression);
    const auto oracle =
        numeric_argmax(Objective::MaxEfficiency, StrokeConfig::SuddenCompression,
                       0.2, 10.0);
    double worst_non_engine = 0.0;
    for (auto cfg : {StrokeConfig::SuddenExpansion, StrokeConfig::SuddenCompression}) {
        const auto map = rasterize({512, 512}, 5.0, cfg);
        worst_non_engine = std::max(
            worst_non_engine, 1.0 - map.area_fraction(OperationalMode::Engine));
    }
    const bool pass =
        closed > 0.9 && oracle && oracle->value > 0.9 && worst_non_engine < 0.05;
    report(8, "large-squeezing limits", pass,
           "eta_SC_up(r=10)=" + fmt("%.6f", closed) +
               " non-engine(r=5)=" + fmt("%.4f", worst_non_engine));
}

// 9. Exact results converge to the high-temperature forms as
//    beta_h*omega_h shrinks, monotonically, below 1e-3 at 1e-3.
void criterion_exact_ht_consistency() {
    bool ok = true;
    double final_dev = 0.0;
    for (const auto& [z, tau, r] : std::vector<std::array<double, 3>>{
             {0.7, 0.5, 0.3}, {0.7, 0.16, 1.0}, {0.5, 0.25, 0.0}}) {
        const HTParams hp{z, tau, r, 1.0};
        const double w_ht = ht_work(hp, StrokeConfig::SuddenExpansion);
        const auto eta_ht = ht_efficiency(hp, StrokeConfig::SuddenExpansion);
        double prev_w = 1e300, prev_e = 1e300;
        for (double x : {1e-1, 1e-2, 1e-3}) {
            const CycleParams p =
                CycleParams{z * x, x, 1.0 / tau, 1.0, r, 1.0, 1.0}.with_config(
                    StrokeConfig::SuddenExpansion);
            const double dw =
                std::fabs(sudden_expansion_work_exact(p) - w_ht) / std::fabs(w_ht);
            const auto eff = sudden_expansion_efficiency_exact(p);
            double de = 1e300;
            if (eff.eta && eta_ht) de = std::fabs(*eff.eta - *eta_ht) / std::fabs(*eta_ht);
            ok = ok && dw < prev_w && de < prev_e;
            prev_w = dw;
            prev_e = de;
        }
        ok = ok && prev_w < 1e-3 && prev_e < 1e-3;
        final_dev = std::max({final_dev, prev_w, prev_e});
    }
    report(9, "exact vs high-T consistency", ok,
           "max relative deviation at 1e-3: " + fmt("%.2e", final_dev));
}

// 10. The CLI emits byte-identical files on repeated runs of the
//     documented sweeps.
void criterion_cli_determinism() {
    const std::string cli = OTTO_CLI_PATH;
    const fs::path tmp = fs::temp_directory_path();
    const std::vector<std::string> sweeps = {
        "sweep --quantity eta_up --eta-c 0.4 --r 0:3:0.01",
        "sweep --quantity work --tau 0.16 --z 0.01:0.99:0.001 --r 0,0.5,1",
        "sweep --quantity phase --config SE --r 0.3 --grid 512",
    };
    bool ok = true;
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    for (std::size_t i = 0; i < sweeps.size(); ++i) {
        const fs::path a = tmp / ("otto_acc_" + std::to_string(i) + "_a.csv");
        const fs::path b = tmp / ("otto_acc_" + std::to_string(i) + "_b.csv");
        const int ra = std::system((cli + " " + sweeps[i] + " --out " + a.string()).c_str());
        const int rb = std::system((cli + " " + sweeps[i] + " --out " + b.string()).c_str());
        ok = ok && WEXITSTATUS(ra) == 0 && WEXITSTATUS(rb) == 0 && slurp(a) == slurp(b) &&
             !slurp(a).empty();
    }
    report(10, "CLI determinism", ok, std::to_string(sweeps.size()) + " documented sweeps");
}

}  // namespace

int main() {
    criterion_half_bound();
    criterion_optima();
    criterion_cubics();
    criterion_bound_ordering();
    criterion_intersections();
    criterion_pwc_boundary();
    criterion_phase_maps();
    criterion_large_squeezing();
    criterion_exact_ht_consistency();
    criterion_cli_determinism();
    std::printf("%d of 10 criteria passed\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
