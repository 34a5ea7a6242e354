#include "resetsde/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "resetsde/detail/overloaded.hpp"

namespace resetsde::io {
namespace {

using detail::overloaded;

double number_or(const json& doc, const char* key, double fallback) {
    if (!doc.contains(key) || doc.at(key).is_null()) return fallback;
    if (!doc.at(key).is_number()) throw ConfigError(std::string("field '") + key + "' must be a number");
    return doc.at(key).get<double>();
}

json law_to_json(const InterResetLaw& law) {
    return std::visit(overloaded{
                          [](const ExponentialLaw& l) -> json {
                              return {{"kind", "exponential"}, {"rate", l.rate}};
                          },
                          [](const DeterministicLaw& l) -> json {
                              return {{"kind", "deterministic"}, {"period", l.period}};
                          },
                          [](const ParetoLaw& l) -> json {
                              return {{"kind", "pareto"}, {"scale", l.scale}, {"shape", l.shape}};
                          },
                          [](const CustomLaw& l) -> json {
                              return {{"kind", "custom"}, {"name", l.name}};
                          },
                      },
                      law);
}

InterResetLaw law_from_json(const json& doc) {
    if (!doc.is_object()) throw ConfigError("clock.renewal_law must be an object");
    const std::string kind = doc.value("kind", std::string());
    if (kind == "exponential") return ExponentialLaw{number_or(doc, "rate", 1.0)};
    if (kind == "deterministic") return DeterministicLaw{number_or(doc, "period", 1.0)};
    if (kind == "pareto") return ParetoLaw{number_or(doc, "scale", 1.0), number_or(doc, "shape", 1.5)};
    throw ConfigError("clock.renewal_law.kind must be exponential, deterministic or pareto, got '" +
                      kind + "'");
}

}  // namespace

json spec_to_json(const ProcessSpec& spec) {
    json clock = std::visit(overloaded{
                                [](const HomogeneousPoisson& c) -> json {
                                    return {{"type", "poisson"}, {"r", c.rate}};
                                },
                                [](const NonhomogeneousPoisson& c) -> json {
                                    return {{"type", "npp"}, {"r", c.rate}, {"p", c.exponent}};
                                },
                                [](const Renewal& c) -> json {
                                    return {{"type", "renewal"}, {"renewal_law", law_to_json(c.law)}};
                                },
                            },
                            spec.clock);
    return {{"diffusivity", spec.diffusivity}, {"x0", spec.x0}, {"xR", spec.x_reset}, {"clock", clock}};
}

ProcessSpec spec_from_json(const json& doc) {
    if (!doc.is_object()) throw ConfigError("process spec must be a JSON object");
    ProcessSpec spec;
    spec.diffusivity = number_or(doc, "diffusivity", spec.diffusivity);
    spec.x0 = number_or(doc, "x0", spec.x0);
    spec.x_reset = number_or(doc, "xR", spec.x_reset);
    if (doc.contains("clock")) {
        const json& clock = doc.at("clock");
        if (!clock.is_object()) throw ConfigError("clock must be an object");
        const std::string type = clock.value("type", std::string("poisson"));
        if (type == "poisson") {
            spec.clock = HomogeneousPoisson{number_or(clock, "r", 1.0)};
        } else if (type == "npp") {
            spec.clock = NonhomogeneousPoisson{number_or(clock, "r", 1.0), number_or(clock, "p", 0.0)};
        } else if (type == "renewal") {
            if (!clock.contains("renewal_law")) throw ConfigError("renewal clock needs clock.renewal_law");
            spec.clock = Renewal{law_from_json(clock.at("renewal_law"))};
        } else {
            throw ConfigError("clock.type must be poisson, npp or renewal, got '" + type + "'");
        }
    }
    return spec;
}

json scheme_to_json(const SchemeConfig& cfg) {
    json doc = std::visit(overloaded{
                              [](const EulerScheme& e) -> json {
                                  return {{"type", "euler"}, {"dt", e.dt}, {"drift", e.drift}};
                              },
                              [](const ExactScheme&) -> json { return {{"type", "exact"}}; },
                          },
                          cfg.scheme);
    doc["horizon"] = cfg.horizon;
    if (!cfg.grid.empty()) doc["grid"] = cfg.grid;
    return doc;
}

SchemeConfig scheme_from_json(const json& doc) {
    if (!doc.is_object()) throw ConfigError("scheme must be a JSON object");
    SchemeConfig cfg;
    const std::string type = doc.value("type", std::string("exact"));
    if (type == "euler") {
        cfg.scheme = EulerScheme{number_or(doc, "dt", 1e-3), number_or(doc, "drift", 0.0)};
    } else if (type == "exact") {
        cfg.scheme = ExactScheme{};
    } else {
        throw ConfigError("scheme.type must be euler or exact, got '" + type + "'");
    }
    cfg.horizon = number_or(doc, "horizon", cfg.horizon);
    if (doc.contains("grid")) {
        if (!doc.at("grid").is_array()) throw ConfigError("scheme.grid must be an array");
        cfg.grid = doc.at("grid").get<std::vector<double>>();
    }
    return cfg;
}

json ensemble_metadata(const Ensemble& ensemble) {
    return {{"spec", spec_to_json(ensemble.spec)},
            {"scheme", scheme_to_json(ensemble.config)},
            {"seed", ensemble.seed},
            {"n", ensemble.trajectories.size()},
            {"grid_points", ensemble.grid.size()}};
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

void write_trajectories_csv(std::ostream& out, const Ensemble& ensemble) {
    out << "trajectory,t,x\n";
    for (std::size_t i = 0; i < ensemble.trajectories.size(); ++i) {
        const auto& traj = ensemble.trajectories[i];
        for (std::size_t k = 0; k < traj.times.size(); ++k)
            out << i << ',' << format_number(traj.times[k]) << ',' << format_number(traj.positions[k])
                << '\n';
    }
}

void write_resets_csv(std::ostream& out, const Ensemble& ensemble) {
    out << "trajectory,t\n";
    for (std::size_t i = 0; i < ensemble.trajectories.size(); ++i)
        for (double t : ensemble.trajectories[i].reset_times)
            out << i << ',' << format_number(t) << '\n';
}

void write_density_csv(std::ostream& out, const DensityCurve& curve) {
    out << "x,value\n";
    for (std::size_t i = 0; i < curve.xs.size(); ++i)
        out << format_number(curve.xs[i]) << ',' << format_number(curve.values[i]) << '\n';
}

void write_moments_csv(std::ostream& out, const MomentTable& table) {
    out << "order,value\n";
    for (std::size_t n = 0; n < table.values.size(); ++n)
        out << n << ',' << format_number(table.values[n]) << '\n';
}

void write_msd_csv(std::ostream& out, const stats::MsdSeries& series) {
    out << "t,msd\n";
    for (std::size_t k = 0; k < series.ts.size(); ++k)
        out << format_number(series.ts[k]) << ',' << format_number(series.msd[k]) << '\n';
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
    out << contents;
    if (!out) throw std::ios_base::failure("failed writing " + path.string());
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("invalid JSON in " + path.string() + ": " + e.what());
    }
}

}  // namespace resetsde::io
