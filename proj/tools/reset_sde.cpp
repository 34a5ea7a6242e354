// reset_sde: simulation, closed forms, Fokker-Planck solves and validation
// suites for diffusion with stochastic resetting.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "resetsde/analytic.hpp"
#include "resetsde/errors.hpp"
#include "resetsde/fpe.hpp"
#include "resetsde/io.hpp"
#include "resetsde/simulate.hpp"
#include "resetsde/stats.hpp"
#include "resetsde/validation.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace resetsde;

namespace {

enum Exit { kOk = 0, kValidationFailed = 1, kConfig = 2, kIo = 3, kNumerical = 4 };

struct ProcessFlags {
    std::optional<double> d, x0, xr, r, p;
    std::optional<std::string> clock;
    std::string config;
};

void add_process_flags(CLI::App* app, ProcessFlags& f) {
    app->add_option("--config", f.config, "JSON config file; flags override its values");
    app->add_option("--d", f.d, "diffusivity D");
    app->add_option("--x0", f.x0, "initial position");
    app->add_option("--xr", f.xr, "reset position");
    app->add_option("--r", f.r, "reset rate (base rate for npp)");
    app->add_option("--p", f.p, "npp exponent; r(t) = r (1 + t)^p, implies --clock npp");
    app->add_option("--clock", f.clock, "poisson or npp")->check(CLI::IsMember({"poisson", "npp"}));
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    json doc = io::read_json_file(path);
    if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
    return doc;
}

// Applies process flags on top of the config document.
void apply_process_flags(json& cfg, const ProcessFlags& f) {
    if (f.d) cfg["diffusivity"] = *f.d;
    if (f.x0) cfg["x0"] = *f.x0;
    if (f.xr) cfg["xR"] = *f.xr;
    json& clock = cfg["clock"];
    if (!clock.is_object()) clock = json::object();
    if (!clock.contains("type")) clock["type"] = "poisson";
    if (f.p) {
        clock["p"] = *f.p;
        clock["type"] = "npp";
    }
    if (f.clock) clock["type"] = *f.clock;
    if (f.r) clock["r"] = *f.r;
    if (!clock.contains("r")) clock["r"] = 1.0;
    if (clock["type"] == "npp" && !clock.contains("p")) clock["p"] = 0.0;
}

json& section(json& cfg, const char* key) {
    json& s = cfg[key];
    if (s.is_null()) s = json::object();
    if (!s.is_object()) throw ConfigError(std::string("config key '") + key + "' must be an object");
    return s;
}

template <class T>
T get_or(const json& doc, const char* key, T fallback) {
    if (!doc.contains(key) || doc.at(key).is_null()) return fallback;
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("config key '") + key + "' has the wrong type");
    }
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n < 2) throw ConfigError("--points must be at least 2");
    if (!(hi > lo)) throw ConfigError("range must satisfy min < max");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    out.back() = hi;
    return out;
}

class Run {
public:
    explicit Run(fs::path out) : out_(std::move(out)), start_(std::chrono::steady_clock::now()) {}

    fs::path write(const std::string& name, const std::string& contents) {
        const fs::path path = out_ / name;
        io::write_file(path, contents);
        outputs_.push_back(path.string());
        return path;
    }

    void finish(const std::string& command, const json& config, std::optional<std::uint64_t> seed,
                const json& extra = json::object()) {
        json manifest = {
            {"command", command},
            {"config", config},
            {"seed", seed ? json(*seed) : json(nullptr)},
            {"version", RESETSDE_VERSION},
            {"wall_seconds",
             std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count()},
            {"outputs", outputs_},
        };
        for (const auto& [k, v] : extra.items()) manifest[k] = v;
        io::write_file(out_ / "manifest.json", manifest.dump(2) + "\n");
    }

private:
    fs::path out_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::string> outputs_;
};

std::string command_line(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i) out += ' ';
        out += argv[i];
    }
    return out;
}

// ---- simulate ----

struct SimulateFlags {
    ProcessFlags process;
    std::optional<std::string> scheme;
    std::optional<double> dt, horizon, drift;
    std::optional<std::size_t> n, points;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::optional<std::string> out;
};

int cmd_simulate(const SimulateFlags& f, const std::string& command) {
    json cfg = load_config(f.process.config);
    apply_process_flags(cfg, f.process);
    json& scheme = section(cfg, "scheme");
    if (f.scheme) scheme["type"] = *f.scheme;
    if (!scheme.contains("type")) scheme["type"] = "exact";
    if (f.dt) scheme["dt"] = *f.dt;
    if (f.drift) scheme["drift"] = *f.drift;
    if (f.horizon) scheme["horizon"] = *f.horizon;
    if (!scheme.contains("horizon")) scheme["horizon"] = 1.0;
    if (f.points) scheme["grid"] = linspace(0.0, scheme["horizon"].get<double>(), *f.points);
    json& run = section(cfg, "run");
    if (f.n) run["n"] = *f.n;
    if (f.seed) run["seed"] = *f.seed;
    if (f.threads) run["threads"] = *f.threads;
    if (f.out) run["out"] = *f.out;
    if (!run.contains("n")) run["n"] = 100;
    if (!run.contains("seed")) run["seed"] = 1;
    if (!run.contains("out")) run["out"] = "out";
    const auto threads = get_or<unsigned>(run, "threads", default_thread_count());
    run.erase("threads");  // output does not depend on it

    const ProcessSpec spec = io::spec_from_json(cfg);
    const SchemeConfig scheme_cfg = io::scheme_from_json(scheme);
    const auto n = get_or<std::size_t>(run, "n", 100);
    const auto seed = get_or<std::uint64_t>(run, "seed", 1);
    if (n == 0) throw ConfigError("--n must be at least 1");

    const Ensemble ens = run_ensemble(spec, scheme_cfg, n, seed, threads);
    Run out(get_or<std::string>(run, "out", "out"));
    std::ostringstream traj, resets;
    io::write_trajectories_csv(traj, ens);
    io::write_resets_csv(resets, ens);
    out.write("trajectories.csv", traj.str());
    out.write("resets.csv", resets.str());
    if (ens.grid.size() > 1) {
        std::ostringstream msd;
        io::write_msd_csv(msd, stats::empirical_msd(ens));
        out.write("msd.csv", msd.str());
    }
    cfg["spec"] = io::spec_to_json(spec);
    out.finish(command, cfg, seed, {{"ensemble", io::ensemble_metadata(ens)}});
    std::cout << "simulated " << n << " trajectories on " << ens.grid.size() << " grid points\n";
    return kOk;
}

// ---- analytic ----

struct AnalyticFlags {
    ProcessFlags process;
    std::string quantity;
    std::vector<double> t;
    std::optional<double> lo, hi, t_max;
    std::optional<std::size_t> points;
    std::optional<int> n_max;
    std::optional<std::string> out;
};

// E[(X_t - x_R)^2].
double msd_about_reset(const ProcessSpec& spec, double t) {
    if (std::holds_alternative<NonhomogeneousPoisson>(spec.clock) &&
        std::get<NonhomogeneousPoisson>(spec.clock).exponent != 0.0)
        return analytic::npp_msd(spec, t);
    ProcessSpec shifted = spec;
    shifted.x0 = spec.x0 - spec.x_reset;
    shifted.x_reset = 0.0;
    return analytic::nth_moment(shifted, 2, t);
}

int cmd_analytic(const AnalyticFlags& f, const std::string& command) {
    json cfg = load_config(f.process.config);
    apply_process_flags(cfg, f.process);
    json& a = section(cfg, "analytic");
    a["quantity"] = f.quantity;
    if (!f.t.empty()) a["t"] = f.t;
    if (f.lo) a["min"] = *f.lo;
    if (f.hi) a["max"] = *f.hi;
    if (f.points) a["points"] = *f.points;
    if (f.n_max) a["n_max"] = *f.n_max;
    if (f.t_max) a["t_max"] = *f.t_max;
    if (f.out) cfg["out"] = *f.out;
    if (!cfg.contains("out")) cfg["out"] = "out";

    const ProcessSpec spec = io::spec_from_json(cfg);
    validate_spec(spec);
    const auto times = get_or<std::vector<double>>(a, "t", {1.0});
    const auto points = get_or<std::size_t>(a, "points", 401);
    Run out(cfg["out"].get<std::string>());
    const std::string& q = f.quantity;
    std::ostringstream csv;

    if (q == "regime") {
        if (!std::holds_alternative<NonhomogeneousPoisson>(spec.clock) &&
            !std::holds_alternative<HomogeneousPoisson>(spec.clock))
            throw UnsupportedCase("regime needs a Poisson or npp clock");
        const double p = std::holds_alternative<NonhomogeneousPoisson>(spec.clock)
                             ? std::get<NonhomogeneousPoisson>(spec.clock).exponent
                             : 0.0;
        const auto regime = analytic::classify_regime(p);
        const json doc = {{"exponent", regime.exponent},
                          {"law", analytic::to_string(regime.law)},
                          {"msd_vanishes", regime.msd_vanishes}};
        out.write("regime.json", doc.dump(2) + "\n");
        out.finish(command, cfg, std::nullopt);
        std::cout << doc.dump() << "\n";
        return kOk;
    }

    if (q == "pdf" || q == "stationary") {
        double lo = 0, hi = 0;
        const double centre = spec.x_reset;
        const double spread = 6.0 * std::sqrt(2.0 * spec.diffusivity * *std::max_element(times.begin(), times.end()));
        lo = get_or<double>(a, "min", std::min(spec.x0, centre) - std::max(spread, 1.0));
        hi = get_or<double>(a, "max", std::max(spec.x0, centre) + std::max(spread, 1.0));
        const auto xs = linspace(lo, hi, points);
        if (q == "stationary") {
            DensityCurve curve{xs, {}, INFINITY, Provenance::analytic};
            for (double x : xs) curve.values.push_back(analytic::stationary_pdf(spec, x));
            io::write_density_csv(csv, curve);
        } else {
            csv << "t,x,value\n";
            for (double t : times) {
                const auto curve = analytic::tabulate_pdf(spec, xs, t);
                for (std::size_t i = 0; i < xs.size(); ++i)
                    csv << io::format_number(t) << ',' << io::format_number(xs[i]) << ','
                        << io::format_number(curve.values[i]) << '\n';
            }
        }
    } else if (q == "cf" || q == "mgf") {
        const auto r = std::holds_alternative<HomogeneousPoisson>(spec.clock) ? homogeneous_rate(spec.clock) : 1.0;
        const double edge = q == "mgf" ? 0.99 * std::sqrt(2.0 * r) / std::sqrt(2.0 * spec.diffusivity) : 10.0;
        const double lo = get_or<double>(a, "min", -edge);
        const double hi = get_or<double>(a, "max", edge);
        const auto ss = linspace(lo, hi, points);
        csv << (q == "mgf" ? "t,s,value\n" : "t,s,re,im\n");
        for (double t : times)
            for (double s : ss) {
                csv << io::format_number(t) << ',' << io::format_number(s) << ',';
                if (q == "mgf") {
                    csv << io::format_number(analytic::mgf(spec, s, t)) << '\n';
                } else {
                    const auto phi = std::holds_alternative<NonhomogeneousPoisson>(spec.clock)
                                         ? analytic::npp_char_fn(spec, s, t)
                                         : analytic::char_fn(spec, s, t);
                    csv << io::format_number(phi.real()) << ',' << io::format_number(phi.imag()) << '\n';
                }
            }
    } else if (q == "mean" || q == "msd") {
        std::vector<double> ts = times;
        if (a.contains("t_max")) {
            const double t_max = a["t_max"].get<double>();
            ts = linspace(0.0, t_max, points);
        }
        csv << (q == "mean" ? "t,mean\n" : "t,msd\n");
        for (double t : ts)
            csv << io::format_number(t) << ','
                << io::format_number(q == "mean" ? analytic::mean(spec, t) : msd_about_reset(spec, t)) << '\n';
    } else if (q == "moments") {
        if (times.size() != 1) throw ConfigError("moments takes a single --t");
        io::write_moments_csv(csv, analytic::moment_table(spec, get_or<int>(a, "n_max", 6), times.front()));
    }
    out.write("curve.csv", csv.str());
    out.finish(command, cfg, std::nullopt);
    std::cout << "wrote " << q << " table\n";
    return kOk;
}

// ---- fpe ----

struct FpeFlags {
    ProcessFlags process;
    std::string form = "evans";
    std::optional<double> t, h, dt, lo, hi;
    std::optional<std::string> boundary;
    bool compare = false;
    std::optional<std::string> out;
};

int cmd_fpe(const FpeFlags& f, const std::string& command) {
    json cfg = load_config(f.process.config);
    apply_process_flags(cfg, f.process);
    json& s = section(cfg, "fpe");
    s["form"] = f.form;
    if (f.t) s["t"] = *f.t;
    if (f.h) s["h"] = *f.h;
    if (f.dt) s["dt"] = *f.dt;
    if (f.lo) s["x_min"] = *f.lo;
    if (f.hi) s["x_max"] = *f.hi;
    if (f.boundary) s["boundary"] = *f.boundary;
    if (f.out) cfg["out"] = *f.out;
    if (!cfg.contains("out")) cfg["out"] = "out";

    const ProcessSpec spec = io::spec_from_json(cfg);
    const std::string form = s["form"].get<std::string>();
    const double t = form == "stationary" ? 0.0 : get_or<double>(s, "t", 1.0);
    fpe::FpeGrid grid = fpe::default_grid(spec, t, get_or<double>(s, "h", 1e-2), get_or<double>(s, "dt", 1e-3));
    if (s.contains("x_min") || s.contains("x_max")) {
        const double lo = get_or<double>(s, "x_min", grid.x_lo);
        const double hi = get_or<double>(s, "x_max", grid.x_hi());
        if (!(hi > lo)) throw ConfigError("--x-min must be below --x-max");
        grid.x_lo = lo;
        grid.n = static_cast<std::size_t>(std::llround((hi - lo) / grid.h)) + 1;
    }
    const std::string boundary = get_or<std::string>(s, "boundary", "reflecting");
    if (boundary == "absorbing") grid.boundary = fpe::Boundary::absorbing;
    else if (boundary != "reflecting") throw ConfigError("--boundary must be reflecting or absorbing");
    s["grid"] = {{"x_min", grid.x_lo}, {"x_max", grid.x_hi()}, {"n", grid.n}, {"h", grid.h}, {"dt", grid.dt}};

    const auto solve = [&](const std::string& which) {
        if (which == "evans") return fpe::solve_fpe_evans(spec, grid, t);
        if (which == "delta-fl") return fpe::solve_fpe_delta_fl(spec, grid, t);
        return fpe::stationary_fpe(spec, grid);
    };
    const DensityCurve curve = solve(form);
    json report = {{"mass", curve.integral()}};
    if (f.compare) {
        if (form != "stationary") {
            const auto other = solve(form == "evans" ? "delta-fl" : "evans");
            report["l1_evans_vs_delta_fl"] = l1_distance(curve, other);
        }
        if (std::holds_alternative<HomogeneousPoisson>(spec.clock) ||
            std::holds_alternative<NonhomogeneousPoisson>(spec.clock)) {
            DensityCurve exact{curve.xs, {}, curve.t, Provenance::analytic};
            for (double x : curve.xs)
                exact.values.push_back(form == "stationary" ? analytic::stationary_pdf(spec, x)
                                                            : analytic::pdf(spec, x, t));
            report["l1_vs_analytic"] = l1_distance(curve, exact);
            report["linf_vs_analytic"] = linf_distance(curve, exact);
        }
    }
    Run out(cfg["out"].get<std::string>());
    std::ostringstream csv;
    io::write_density_csv(csv, curve);
    out.write("density.csv", csv.str());
    out.finish(command, cfg, std::nullopt, {{"report", report}});
    for (const auto& [k, v] : report.items()) std::cout << k << " " << v.dump() << "\n";
    return kOk;
}

// ---- validate ----

struct ValidateFlags {
    std::vector<std::string> suites;
    double scale = 1.0;
    std::uint64_t seed = validation::Options{}.seed;
    std::optional<unsigned> threads;
    std::string out = "out";
};

int cmd_validate(const ValidateFlags& f, const std::string& command) {
    validation::Options options;
    options.sample_scale = f.scale;
    options.seed = f.seed;
    options.threads = f.threads.value_or(default_thread_count());
    if (!(f.scale > 0.0)) throw ConfigError("--scale must be positive");
    const auto names = f.suites.empty() ? validation::default_suites() : f.suites;

    json suites = json::array();
    bool all = true;
    for (const auto& name : names) {
        const auto result = validation::run_suite(name, options);
        for (const auto& c : result.checks)
            std::cout << (c.passed ? "PASS " : "FAIL ") << name << ": " << c.name << " = " << c.measured << " ("
                      << c.relation << " " << c.threshold << ")" << (c.detail.empty() ? "" : "  [" + c.detail + "]")
                      << "\n";
        std::cout << (result.passed() ? "PASS " : "FAIL ") << "suite " << name << " in " << result.seconds << " s\n"
                  << std::flush;
        all = all && result.passed();
        suites.push_back(validation::to_json(result));
    }
    Run out(f.out);
    const json report = {{"passed", all}, {"suites", suites}};
    out.write("report.json", report.dump(2) + "\n");
    const json cfg = {{"suites", names}, {"scale", f.scale}, {"seed", f.seed}};
    out.finish(command, cfg, f.seed, {{"passed", all}});
    return all ? kOk : kValidationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brownian motion with stochastic resetting: simulation, closed forms, PDE solves"};
    app.set_version_flag("--version", std::string(RESETSDE_VERSION));
    app.require_subcommand(1);

    SimulateFlags sim;
    auto* simulate = app.add_subcommand("simulate", "simulate an ensemble of trajectories");
    add_process_flags(simulate, sim.process);
    simulate->add_option("--scheme", sim.scheme, "exact or euler")->check(CLI::IsMember({"exact", "euler"}));
    simulate->add_option("--dt", sim.dt, "Euler step");
    simulate->add_option("--drift", sim.drift, "constant drift (Euler only)");
    simulate->add_option("--horizon", sim.horizon, "final time");
    simulate->add_option("--points", sim.points, "evenly spaced output times on [0, horizon]");
    simulate->add_option("--n", sim.n, "number of trajectories");
    simulate->add_option("--seed", sim.seed, "RNG seed");
    simulate->add_option("--threads", sim.threads, "worker threads (default RESET_SDE_THREADS or 1)");
    simulate->add_option("--out", sim.out, "output directory");

    AnalyticFlags an;
    auto* analytic = app.add_subcommand("analytic", "tabulate closed-form quantities");
    add_process_flags(analytic, an.process);
    analytic->add_option("quantity", an.quantity, "pdf, cf, mgf, mean, moments, msd, stationary or regime")
        ->required()
        ->check(CLI::IsMember({"pdf", "cf", "mgf", "mean", "moments", "msd", "stationary", "regime"}));
    analytic->add_option("--t", an.t, "evaluation time(s)");
    analytic->add_option("--min", an.lo, "lower end of the x (pdf) or s (cf, mgf) range");
    analytic->add_option("--max", an.hi, "upper end of the x or s range");
    analytic->add_option("--points", an.points, "points in the range");
    analytic->add_option("--t-max", an.t_max, "mean/msd on an even time grid over [0, t-max]");
    analytic->add_option("--n-max", an.n_max, "highest moment order");
    analytic->add_option("--out", an.out, "output directory");

    FpeFlags fp;
    auto* fpe_cmd = app.add_subcommand("fpe", "solve the Fokker-Planck equation on a grid");
    add_process_flags(fpe_cmd, fp.process);
    fpe_cmd->add_option("--form", fp.form, "evans, delta-fl or stationary")
        ->check(CLI::IsMember({"evans", "delta-fl", "stationary"}));
    fpe_cmd->add_option("--t", fp.t, "final time");
    fpe_cmd->add_option("--dx", fp.h, "grid spacing h");
    fpe_cmd->add_option("--dt", fp.dt, "time step");
    fpe_cmd->add_option("--x-min", fp.lo, "left wall");
    fpe_cmd->add_option("--x-max", fp.hi, "right wall");
    fpe_cmd->add_option("--boundary", fp.boundary, "reflecting or absorbing");
    fpe_cmd->add_flag("--compare", fp.compare, "also report L1 against the other form and the closed form");
    fpe_cmd->add_option("--out", fp.out, "output directory");

    ValidateFlags va;
    auto* validate = app.add_subcommand("validate", "run validation suites");
    validate->add_option("--suite", va.suites, "suite name (repeatable)")
        ->check(CLI::IsMember(validation::suite_names()));
    validate->add_option("--scale", va.scale, "multiplier on Monte Carlo sample counts");
    validate->add_option("--seed", va.seed, "base seed");
    validate->add_option("--threads", va.threads, "worker threads (default RESET_SDE_THREADS or 1)");
    validate->add_option("--out", va.out, "output directory for report.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    const std::string command = command_line(argc, argv);
    try {
        if (simulate->parsed()) return cmd_simulate(sim, command);
        if (analytic->parsed()) return cmd_analytic(an, command);
        if (fpe_cmd->parsed()) return cmd_fpe(fp, command);
        if (validate->parsed()) return cmd_validate(va, command);
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kNumerical;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kConfig;
    } catch (const UnsupportedCase& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kConfig;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumerical;
    }
    return kConfig;
}
