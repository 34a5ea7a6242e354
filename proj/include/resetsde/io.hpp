#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "resetsde/core.hpp"
#include "resetsde/curves.hpp"
#include "resetsde/simulate.hpp"
#include "resetsde/stats.hpp"

namespace resetsde::io {

using nlohmann::json;

/// {"diffusivity", "x0", "xR", "clock": {"type", "r", "p", "renewal_law"}}.
/// "type" is one of "poisson", "npp", "renewal"; renewal_law is
/// {"kind": "exponential", "rate"} | {"kind": "deterministic", "period"} |
/// {"kind": "pareto", "scale", "shape"}. Missing keys take ProcessSpec
/// defaults. Throws ConfigError on malformed documents.
json spec_to_json(const ProcessSpec& spec);
ProcessSpec spec_from_json(const json& doc);

/// {"type": "euler", "dt", "drift"} | {"type": "exact"}, plus "horizon" and
/// an optional explicit "grid".
json scheme_to_json(const SchemeConfig& cfg);
SchemeConfig scheme_from_json(const json& doc);

/// Spec, scheme, seed, ensemble size and grid length.
json ensemble_metadata(const Ensemble& ensemble);

/// Shortest round-trip decimal form, independent of locale.
std::string format_number(double value);

/// Header "trajectory,t,x".
void write_trajectories_csv(std::ostream& out, const Ensemble& ensemble);
/// Header "trajectory,t" listing every reset epoch.
void write_resets_csv(std::ostream& out, const Ensemble& ensemble);
/// Header "x,value".
void write_density_csv(std::ostream& out, const DensityCurve& curve);
/// Header "order,value".
void write_moments_csv(std::ostream& out, const MomentTable& table);
/// Header "t,msd".
void write_msd_csv(std::ostream& out, const stats::MsdSeries& series);

/// Writes text to `path`, throwing std::ios_base::failure on error.
void write_file(const std::filesystem::path& path, const std::string& contents);
json read_json_file(const std::filesystem::path& path);

}  // namespace resetsde::io
