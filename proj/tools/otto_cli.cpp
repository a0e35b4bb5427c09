// Command-line front end: parameter sweeps over the closed-form
// thermodynamics (work, efficiency, optimal-efficiency bounds, phase
// rasters) emitted as CSV/JSON, plus a `verify` mode that replays the
// numeric-oracle checks and reports residuals against their tolerances.
//
// Exit codes: 0 success, 1 validation error, 2 verification failure,
// 3 I/O error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "otto/cycle.hpp"
#include "otto/ht.hpp"
#include "otto/optimize.hpp"
#include "otto/phase.hpp"
#include "otto/random.hpp"

namespace {

using otto::StrokeConfig;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// "a:b:s" inclusive of a, exclusive of b beyond round-off; "x,y,z"
// comma list; a bare number is a one-element list.
std::vector<double> parse_values(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    auto to_double = [&](const std::string& s) {
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "cannot parse number '" + s + "'");
        }
        if (pos != s.size())
            throw CLI::ValidationError(flag, "cannot parse number '" + s + "'");
        return v;
    };
    if (text.find(':') != std::string::npos) {
        std::stringstream ss(text);
        std::string a, b, s;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, s))
            throw CLI::ValidationError(flag, "range must be start:stop:step");
        const double start = to_double(a), stop = to_double(b), step = to_double(s);
        if (!(step > 0.0)) throw CLI::ValidationError(flag, "step must be > 0");
        for (long k = 0;; ++k) {
            const double v = start + k * step;
            if (v >= stop - 1e-9 * step) break;
            out.push_back(v);
        }
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(to_double(item));
    }
    if (out.empty()) throw CLI::ValidationError(flag, "empty value set");
    return out;
}

// ---------------------------------------------------------------------------
// Tabular output

using Cell = std::variant<double, std::optional<double>, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string cell_csv(const Cell& c) {
    if (std::holds_alternative<double>(c)) return fmt17(std::get<double>(c));
    if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
    const auto& o = std::get<std::optional<double>>(c);
    return o ? fmt17(*o) : "nan";
}

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << cell_csv(row[i]);
        os << "\n";
    }
}

void write_json(std::ostream& os, const nlohmann::ordered_json& spec_echo,
                const Table& t) {
    nlohmann::ordered_json doc;
    doc["spec"] = spec_echo;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            const auto& key = t.columns[i];
            if (std::holds_alternative<double>(row[i]))
                obj[key] = std::get<double>(row[i]);
            else if (std::holds_alternative<std::string>(row[i]))
                obj[key] = std::get<std::string>(row[i]);
            else {
                const auto& o = std::get<std::optional<double>>(row[i]);
                if (o)
                    obj[key] = *o;
                else
                    obj[key] = nullptr;
            }
        }
        doc["rows"].push_back(std::move(obj));
    }
    os << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
    std::string quantity;
    std::string config = "both";
    double tau = -1.0;     // set via --tau
    double eta_c = -1.0;   // or via --eta-c
    std::string r_text;
    std::string z_text;
    std::size_t grid = 512;
    double beta_h = 1.0;
    std::string format = "csv";
    std::string out;
};

double resolve_tau(const SweepOptions& o) {
    if (o.tau >= 0.0 && o.eta_c >= 0.0)
        throw CLI::ValidationError("--tau", "--tau and --eta-c are mutually exclusive");
    if (o.tau >= 0.0) return o.tau;
    if (o.eta_c >= 0.0) return 1.0 - o.eta_c;
    throw CLI::ValidationError("--tau", "one of --tau or --eta-c is required");
}

Table sweep_work_or_efficiency(const SweepOptions& o, bool efficiency) {
    const double tau = resolve_tau(o);
    if (o.z_text.empty()) throw CLI::ValidationError("--z", "required for this quantity");
    if (o.r_text.empty()) throw CLI::ValidationError("--r", "required for this quantity");
    const auto zs = parse_values(o.z_text, "--z");
    const auto rs = parse_values(o.r_text, "--r");

    Table t;
    t.columns = efficiency
                    ? std::vector<std::string>{"z", "r", "tau", "eta_SE", "eta_SC"}
                    : std::vector<std::string>{"z", "r", "tau", "W_SE", "W_SC"};
    for (double r : rs) {
        for (double z : zs) {
            const otto::HTParams p{z, tau, r, o.beta_h};
            std::vector<Cell> row{z, r, tau};
            if (efficiency) {
                row.emplace_back(otto::ht_efficiency(p, StrokeConfig::SuddenExpansion));
                row.emplace_back(otto::ht_efficiency(p, StrokeConfig::SuddenCompression));
            } else {
                row.emplace_back(otto::ht_work(p, StrokeConfig::SuddenExpansion));
                row.emplace_back(otto::ht_work(p, StrokeConfig::SuddenCompression));
            }
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

Table sweep_bound(const SweepOptions& o, const std::string& quantity) {
    const double tau = resolve_tau(o);
    const double eta_c = 1.0 - tau;
    if (o.r_text.empty()) throw CLI::ValidationError("--r", "required for this quantity");
    const auto rs = parse_values(o.r_text, "--r");

    Table t;
    const std::string stem = quantity == "delta" ? "delta" : "value";
    t.columns = {"r", "eta_c", stem + "_SE", stem + "_SC"};
    for (double r : rs) {
        std::vector<Cell> row{r, eta_c};
        for (auto cfg : {StrokeConfig::SuddenExpansion, StrokeConfig::SuddenCompression}) {
            double v;
            if (quantity == "eta_up")
                v = otto::eta_upper_bound(eta_c, r, cfg);
            else if (quantity == "eta_mw")
                v = otto::eta_max_work(eta_c, r, cfg);
            else
                v = otto::eta_upper_bound(eta_c, r, cfg) - otto::eta_max_work(eta_c, r, cfg);
            row.emplace_back(v);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table sweep_phase(const SweepOptions& o) {
    StrokeConfig cfg;
    if (o.config == "SE")
        cfg = StrokeConfig::SuddenExpansion;
    else if (o.config == "SC")
        cfg = StrokeConfig::SuddenCompression;
    else
        throw CLI::ValidationError("--config", "phase sweeps need --config SE or SC");
    if (o.r_text.empty()) throw CLI::ValidationError("--r", "required for this quantity");
    const auto rs = parse_values(o.r_text, "--r");
    if (rs.size() != 1)
        throw CLI::ValidationError("--r", "phase sweeps take a single r value");
    if (o.grid < 2) throw CLI::ValidationError("--grid", "resolution must be >= 2");

    const otto::PhaseMap map =
        otto::rasterize({o.grid, o.grid}, rs[0], cfg, o.beta_h);
    Table t;
    t.columns = {"z", "tau", "mode", "W", "Q_h", "Q_c"};
    for (std::size_t i = 0; i < map.grid.ntau; ++i) {
        for (std::size_t j = 0; j < map.grid.nz; ++j) {
            const std::size_t k = map.index(i, j);
            t.rows.push_back({map.z_at(j), map.tau_at(i),
                              std::string(otto::mode_name(map.modes[k])), map.w[k],
                              map.q_h[k], map.q_c[k]});
        }
    }
    return t;
}

int run_sweep(const SweepOptions& o) {
    Table t;
    if (o.quantity == "work")
        t = sweep_work_or_efficiency(o, false);
    else if (o.quantity == "efficiency")
        t = sweep_work_or_efficiency(o, true);
    else if (o.quantity == "eta_up" || o.quantity == "eta_mw" || o.quantity == "delta")
        t = sweep_bound(o, o.quantity);
    else if (o.quantity == "phase")
        t = sweep_phase(o);
    else
        throw CLI::ValidationError("--quantity", "unknown quantity '" + o.quantity + "'");

    nlohmann::ordered_json echo;
    echo["quantity"] = o.quantity;
    echo["config"] = o.config;
    if (o.tau >= 0.0) echo["tau"] = o.tau;
    if (o.eta_c >= 0.0) echo["eta_c"] = o.eta_c;
    if (!o.r_text.empty()) echo["r"] = o.r_text;
    if (!o.z_text.empty()) echo["z"] = o.z_text;
    if (o.quantity == "phase") echo["grid"] = o.grid;
    echo["beta_h"] = o.beta_h;

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open output file '" << o.out << "'\n";
            return 3;
        }
        os = &file;
    }
    if (o.format == "csv")
        write_csv(*os, t);
    else if (o.format == "json")
        write_json(*os, echo, t);
    else
        throw CLI::ValidationError("--format", "must be csv or json");
    os->flush();
    if (!*os) {
        std::cerr << "error: write failure\n";
        return 3;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct CheckReport {
    bool ok = true;
    void line(const std::string& name, double measured, double tol, bool pass) {
        std::printf("%-38s measured=%.3e tol=%.1e [%s]\n", name.c_str(), measured,
                    tol, pass ? "ok" : "FAIL");
        ok = ok && pass;
    }
};

void verify_cubics(CheckReport& rep, std::uint64_t seed, bool inject_fault) {
    otto::UniformRng rng(seed);
    double max_res = 0.0, min_disc = 1e300;
    for (int i = 0; i < 100; ++i) {
        const double tau = rng.uniform(0.05, 0.95);
        const double r = rng.uniform(0.0, 2.0);
        const otto::Cubic sc = otto::sc_efficiency_cubic(tau, r);
        min_disc = std::min(min_disc, sc.discriminant());
        double root = otto::cubic_trig_root(sc);
        if (inject_fault) root += 1e-3;  // negative control: must trip the residual
        max_res = std::max(max_res, sc.residual(root));
        const otto::Cubic se = otto::se_efficiency_cubic(tau, r);
        if (se.discriminant() > 0.0)
            max_res = std::max(max_res, se.residual(otto::cubic_trig_root(se)));
        else  // single-real-root regime: check the hyperbolic-path root too
            max_res = std::max(max_res, se.residual(otto::cubic_real_roots(se)[0]));
    }
    rep.line("cubics: trig-root residual", max_res, 1e-9, max_res < 1e-9);
    rep.line("cubics: SC discriminant > 0", min_disc, 0.0, min_disc > 0.0);
}

void verify_optima(CheckReport& rep, std::uint64_t seed) {
    otto::UniformRng rng(seed);
    double max_dz = 0.0, max_dv = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double tau = rng.uniform(0.05, 0.95);
        const double r = rng.uniform(0.0, 2.0);
        for (auto cfg : {StrokeConfig::SuddenExpansion, StrokeConfig::SuddenCompression}) {
            for (auto obj : {otto::Objective::MaxWork, otto::Objective::MaxEfficiency}) {
                const otto::Optimum a = obj == otto::Objective::MaxWork
                                            ? otto::optimal_z_work(tau, r, cfg)
                                            : otto::optimal_z_efficiency(tau, r, cfg);
                const auto n = otto::numeric_argmax(obj, cfg, tau, r);
                if (!n) continue;
                max_dz = std::max(max_dz, std::fabs(a.z_star - n->z_star));
                max_dv = std::max(max_dv, std::fabs(a.value - n->value));
            }
        }
    }
    rep.line("optima: |z*_analytic - z*_numeric|", max_dz, 1e-6, max_dz < 1e-6);
    rep.line("optima: |value gap|", max_dv, 1e-9, max_dv < 1e-9);
}

void verify_bounds(CheckReport& rep, std::uint64_t seed) {
    otto::UniformRng rng(seed);
    double max_eta = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const otto::HTParams p{rng.uniform(1e-6, 1.0 - 1e-6),
                               rng.uniform(1e-6, 1.0 - 1e-6), rng.uniform(0.0, 3.0)};
        const auto eta = otto::ht_efficiency(p, StrokeConfig::SuddenExpansion);
        if (eta && *eta > 0.0) max_eta = std::max(max_eta, *eta);
    }
    for (int i = 0; i < 10000; ++i) {
        const double wc = rng.uniform(0.05, 5.0);
        otto::CycleParams p{wc,
                            wc + rng.uniform(1e-6, 5.0),
                            0.0,
                            rng.uniform(0.01, 3.0),
                            rng.uniform(0.0, 3.0),
                            1.0,
                            1.0};
        p.beta_c = p.beta_h + rng.uniform(1e-6, 3.0);
        const auto eff =
            otto::sudden_expansion_efficiency_exact(p.with_config(StrokeConfig::SuddenExpansion));
        if (eff.eta && *eff.eta > 0.0) max_eta = std::max(max_eta, *eff.eta);
    }
    rep.line("bounds: max eta_SE (HT and exact)", max_eta, 0.5, max_eta < 0.5);

    double min_delta = 1e300;
    for (double eta_c : {0.4, 0.8})
        for (int k = 0; k <= 300; ++k) {
            const double r = 0.01 * k;
            for (auto cfg :
                 {StrokeConfig::SuddenExpansion, StrokeConfig::SuddenCompression})
                min_delta = std::min(min_delta, otto::eta_upper_bound(eta_c, r, cfg) -
                                                    otto::eta_max_work(eta_c, r, cfg));
        }
    rep.line("bounds: min(eta_up - eta_mw)", min_delta, -1e-12, min_delta >= -1e-12);
}

void verify_phase(CheckReport& rep, std::uint64_t seed) {
    otto::UniformRng rng(seed);
    const double step = 1e-5;
    double max_gap = 0.0;
    bool counts_ok = true;
    for (int i = 0; i < 50; ++i) {
        const double tau = rng.uniform(0.05, 0.95);
        const double r = rng.uniform(0.0, 2.0);
        for (auto cfg : {StrokeConfig::SuddenExpansion, StrokeConfig::SuddenCompression}) {
            const auto rb = otto::region_boundaries(tau, r, cfg);
            std::vector<double> transitions;
            otto::OperationalMode prev =
                otto::classify({step / 2, tau, r, 1.0}, cfg).mode;
            for (double z = 1.5 * step; z < 1.0; z += step) {
                const auto m = otto::classify({z, tau, r, 1.0}, cfg).mode;
                if (m != prev) transitions.push_back(z - step / 2);
                prev = m;
            }
            if (transitions.size() != rb.thresholds.size()) {
                counts_ok = false;
                continue;
            }
            for (std::size_t k = 0; k < transitions.size(); ++k)
                max_gap = std::max(max_gap, std::fabs(transitions[k] - rb.thresholds[k]));
        }
    }
    rep.line("phase: transition count match", counts_ok ? 1.0 : 0.0, 1.0, counts_ok);
    rep.line("phase: |analytic - scanned| boundary", max_gap, step, max_gap <= step);

    bool monotone = true;
    for (auto cfg : {StrokeConfig::SuddenExpansion, StrokeConfig::SuddenCompression}) {
        double prev_eng = -1.0, prev_ref = 2.0;
        for (double r : {0.1, 0.3, 0.5}) {
            const auto map = otto::rasterize({256, 256}, r, cfg);
            const double eng = map.area_fraction(otto::OperationalMode::Engine);
            const double ref = map.area_fraction(otto::OperationalMode::Refrigerator);
            monotone = monotone && eng > prev_eng && ref < prev_ref;
            prev_eng = eng;
            prev_ref = ref;
        }
    }
    rep.line("phase: engine grows / fridge shrinks", monotone ? 1.0 : 0.0, 1.0, monotone);
}

int run_verify(const std::string& scope, std::uint64_t seed, bool inject_fault) {
    CheckReport rep;
    auto guarded = [&rep](auto&& check) {
        try {
            check();
        } catch (const std::exception& e) {
            std::printf("check aborted: %s [FAIL]\n", e.what());
            rep.ok = false;
        }
    };
    if (scope == "cubics" || scope == "all")
        guarded([&] { verify_cubics(rep, seed, inject_fault); });
    if (scope == "optima" || scope == "all") guarded([&] { verify_optima(rep, seed); });
    if (scope == "bounds" || scope == "all") guarded([&] { verify_bounds(rep, seed); });
    if (scope == "phase" || scope == "all") guarded([&] { verify_phase(rep, seed); });
    std::printf("verify: %s\n", rep.ok ? "all checks passed" : "FAILURES detected");
    return rep.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymmetric quantum Otto engine with a hot squeezed reservoir: "
                 "sweeps and oracle verification"};
    app.require_subcommand(1);

    SweepOptions sw;
    auto* sweep = app.add_subcommand("sweep", "evaluate a quantity over a parameter sweep");
    sweep->add_option("--quantity", sw.quantity,
                      "work|efficiency|eta_up|eta_mw|delta|phase")->required();
    sweep->add_option("--config", sw.config, "SE|SC|both (default both)");
    sweep->add_option("--tau", sw.tau, "temperature ratio beta_h/beta_c");
    sweep->add_option("--eta-c", sw.eta_c, "Carnot efficiency 1 - tau");
    sweep->add_option("--r", sw.r_text, "squeezing values (start:stop:step or comma list)");
    sweep->add_option("--z", sw.z_text, "compression-ratio values");
    sweep->add_option("--grid", sw.grid, "phase raster resolution (default 512)");
    sweep->add_option("--beta-h", sw.beta_h, "hot inverse temperature (default 1)");
    sweep->add_option("--format", sw.format, "csv|json (default csv)");
    sweep->add_option("--out", sw.out, "output path (default stdout)");

    std::string scope = "all";
    std::uint64_t seed = 42;
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "run the oracle check suites");
    verify->add_option("--scope", scope, "cubics|optima|bounds|phase|all");
    verify->add_option("--seed", seed, "seed for the random draws (default 42)");
    verify->add_flag("--inject-fault", inject_fault,
                     "corrupt a cubic coefficient (negative-control test mode)");

    try {
        app.parse(argc, argv);
        if (sweep->parsed()) return run_sweep(sw);
        if (scope != "cubics" && scope != "optima" && scope != "bounds" &&
            scope != "phase" && scope != "all")
            throw CLI::ValidationError("--scope", "unknown scope '" + scope + "'");
        return run_verify(scope, seed, inject_fault);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
