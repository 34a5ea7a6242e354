#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "resetsde/analytic.hpp"
#include "resetsde/fpe.hpp"
#include "resetsde/io.hpp"
#include "resetsde/simulate.hpp"
#include "resetsde/stats.hpp"
#include "resetsde/validation.hpp"

namespace py = pybind11;
using namespace resetsde;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Array to_array(const std::vector<double>& v) {
    Array out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(v.size())});
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

std::vector<double> to_vector(const Array& a) { return {a.data(), a.data() + a.size()}; }

ProcessSpec make_spec(double diffusivity, double x0, double x_reset, double rate, std::optional<double> exponent) {
    ProcessSpec spec{diffusivity, x0, x_reset, HomogeneousPoisson{rate}};
    if (exponent) spec.clock = NonhomogeneousPoisson{rate, *exponent};
    validate_spec(spec);
    return spec;
}

SchemeConfig make_scheme(const std::string& scheme, double horizon, double dt, std::optional<Array> grid) {
    SchemeConfig cfg;
    if (scheme == "euler") cfg.scheme = EulerScheme{dt, 0.0};
    else if (scheme == "exact") cfg.scheme = ExactScheme{};
    else throw ConfigError("scheme must be 'exact' or 'euler'");
    cfg.horizon = horizon;
    if (grid) cfg.grid = to_vector(*grid);
    return cfg;
}

py::object json_to_python(const nlohmann::json& doc) {
    return py::module_::import("json").attr("loads")(doc.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Brownian motion with stochastic resetting";
    m.attr("__version__") = RESETSDE_VERSION;

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnsupportedCase>(m, "UnsupportedCase", PyExc_NotImplementedError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<ProcessSpec>(m, "ProcessSpec")
        .def(py::init(&make_spec), py::arg("diffusivity") = 0.5, py::arg("x0") = 0.0, py::arg("x_reset") = 0.0,
             py::arg("rate") = 1.0, py::arg("exponent") = py::none(),
             "Poisson resetting at `rate`; passing `exponent` selects intensity rate * (1 + t)^exponent.")
        .def_readonly("diffusivity", &ProcessSpec::diffusivity)
        .def_readonly("x0", &ProcessSpec::x0)
        .def_readonly("x_reset", &ProcessSpec::x_reset)
        .def_property_readonly("clock_type", [](const ProcessSpec& s) { return clock_type_name(s.clock); })
        .def("to_json", [](const ProcessSpec& s) { return io::spec_to_json(s).dump(); })
        .def_static("from_json",
                    [](const std::string& text) {
                        nlohmann::json doc;
                        try {
                            doc = nlohmann::json::parse(text);
                        } catch (const nlohmann::json::parse_error& e) {
                            throw ConfigError(e.what());
                        }
                        const ProcessSpec spec = io::spec_from_json(doc);
                        validate_spec(spec);
                        return spec;
                    })
        .def("__repr__", [](const ProcessSpec& s) { return "ProcessSpec(" + io::spec_to_json(s).dump() + ")"; });

    m.def(
        "simulate",
        [](const ProcessSpec& spec, std::size_t n, std::uint64_t seed, double horizon, const std::string& scheme,
           double dt, std::optional<Array> grid, unsigned threads) {
            const SchemeConfig cfg = make_scheme(scheme, horizon, dt, grid);
            Ensemble ens;
            {
                py::gil_scoped_release release;
                ens = run_ensemble(spec, cfg, n, seed, threads);
            }
            const auto m = static_cast<py::ssize_t>(ens.grid.size());
            Array positions({static_cast<py::ssize_t>(n), m});
            auto view = positions.mutable_unchecked<2>();
            py::list resets;
            for (std::size_t i = 0; i < n; ++i) {
                const auto& traj = ens.trajectories[i];
                for (py::ssize_t k = 0; k < m; ++k) view(i, k) = traj.position_at(ens.grid[k]);
                resets.append(to_array(traj.reset_times));
            }
            py::dict out;
            out["times"] = to_array(ens.grid);
            out["positions"] = positions;
            out["reset_times"] = resets;
            return out;
        },
        py::arg("spec"), py::arg("n"), py::arg("seed") = 1, py::arg("horizon") = 1.0, py::arg("scheme") = "exact",
        py::arg("dt") = 1e-3, py::arg("grid") = py::none(), py::arg("threads") = 1,
        "Ensemble positions on the output grid, shape (n, len(times)).");

    m.def(
        "marginal_samples",
        [](const ProcessSpec& spec, double t, std::size_t n, std::uint64_t seed, unsigned threads) {
            std::vector<double> xs;
            {
                py::gil_scoped_release release;
                xs = marginal_samples(spec, t, n, seed, threads);
            }
            return to_array(xs);
        },
        py::arg("spec"), py::arg("t"), py::arg("n"), py::arg("seed") = 1, py::arg("threads") = 1);

    m.def("pdf", py::vectorize([](ProcessSpec s, double x, double t) { return analytic::pdf(s, x, t); }),
          py::arg("spec"), py::arg("x"), py::arg("t"));
    m.def("cdf", py::vectorize([](ProcessSpec s, double x, double t) { return analytic::cdf(s, x, t); }),
          py::arg("spec"), py::arg("x"), py::arg("t"));
    m.def("mgf", py::vectorize([](ProcessSpec s, double v, double t) { return analytic::mgf(s, v, t); }),
          py::arg("spec"), py::arg("s"), py::arg("t"));
    m.def("char_fn", &analytic::char_fn, py::arg("spec"), py::arg("s"), py::arg("t"));
    m.def("mean", &analytic::mean, py::arg("spec"), py::arg("t"));
    m.def("nth_moment", &analytic::nth_moment, py::arg("spec"), py::arg("n"), py::arg("t"));
    m.def("stationary_pdf",
          py::vectorize([](ProcessSpec s, double x) { return analytic::stationary_pdf(s, x); }),
          py::arg("spec"), py::arg("x"));
    m.def("npp_pdf",
          py::vectorize([](ProcessSpec s, double x, double t) { return analytic::npp_pdf(s, x, t); }),
          py::arg("spec"), py::arg("x"), py::arg("t"));
    m.def("npp_char_fn", &analytic::npp_char_fn, py::arg("spec"), py::arg("s"), py::arg("t"));
    m.def("npp_msd", &analytic::npp_msd, py::arg("spec"), py::arg("t"));
    m.def(
        "classify_regime",
        [](double p) {
            const auto r = analytic::classify_regime(p);
            py::dict out;
            out["exponent"] = r.exponent;
            out["law"] = analytic::to_string(r.law);
            out["msd_vanishes"] = r.msd_vanishes;
            return out;
        },
        py::arg("p"));

    m.def(
        "solve_fpe",
        [](const ProcessSpec& spec, const std::string& form, double t, double h, double dt) {
            const auto grid = fpe::default_grid(spec, form == "stationary" ? 0.0 : t, h, dt);
            DensityCurve curve;
            {
                py::gil_scoped_release release;
                if (form == "evans") curve = fpe::solve_fpe_evans(spec, grid, t);
                else if (form == "delta-fl") curve = fpe::solve_fpe_delta_fl(spec, grid, t);
                else if (form == "stationary") curve = fpe::stationary_fpe(spec, grid);
                else throw ConfigError("form must be 'evans', 'delta-fl' or 'stationary'");
            }
            return py::make_tuple(to_array(curve.xs), to_array(curve.values));
        },
        py::arg("spec"), py::arg("form") = "evans", py::arg("t") = 1.0, py::arg("h") = 1e-2, py::arg("dt") = 1e-3,
        "Returns (xs, density) on the default grid.");

    m.def(
        "ks_distance",
        [](const Array& samples, const std::function<double(double)>& cdf) {
            return stats::ks_distance(to_vector(samples), cdf);
        },
        py::arg("samples"), py::arg("cdf"));
    m.def(
        "ks_two_sample", [](const Array& a, const Array& b) { return stats::ks_two_sample(to_vector(a), to_vector(b)); },
        py::arg("a"), py::arg("b"));
    m.def(
        "fit_power_law_exponent",
        [](const Array& ts, const Array& msd, double lo, double hi) {
            stats::MsdSeries s;
            s.ts = to_vector(ts);
            s.msd = to_vector(msd);
            if (s.ts.size() != s.msd.size()) throw ConfigError("ts and msd must have equal length");
            return stats::fit_power_law_exponent(s, {lo, hi});
        },
        py::arg("ts"), py::arg("msd"), py::arg("lo"), py::arg("hi"));

    m.def("suite_names", &validation::suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, double scale, std::uint64_t seed, unsigned threads) {
            validation::Options options{scale, seed, threads};
            validation::SuiteResult result;
            {
                py::gil_scoped_release release;
                result = validation::run_suite(name, options);
            }
            return json_to_python(validation::to_json(result));
        },
        py::arg("name"), py::arg("scale") = 1.0, py::arg("seed") = validation::Options{}.seed,
        py::arg("threads") = 1);
}
