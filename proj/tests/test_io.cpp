#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "resetsde/io.hpp"

using namespace resetsde;

TEST_CASE("spec JSON round trip") {
    for (const ProcessSpec& spec :
         {ProcessSpec{0.7, 1.0, -2.0, HomogeneousPoisson{3.0}}, ProcessSpec{0.5, 0.0, 0.0, NonhomogeneousPoisson{1.0, -0.5}},
          ProcessSpec{0.5, 0.0, 1.0, Renewal{ParetoLaw{2.0, 1.2}}}, ProcessSpec{0.5, 0.0, 1.0, Renewal{DeterministicLaw{0.3}}}}) {
        const auto doc = io::spec_to_json(spec);
        CHECK(io::spec_to_json(io::spec_from_json(doc)) == doc);
    }
    const auto doc = io::spec_to_json(ProcessSpec{0.7, 1.0, -2.0, HomogeneousPoisson{3.0}});
    CHECK(doc["xR"] == -2.0);
    CHECK(doc["clock"]["type"] == "poisson");
    CHECK(doc["clock"]["r"] == 3.0);
}

TEST_CASE("malformed specs") {
    using io::json;
    CHECK_THROWS_AS(io::spec_from_json(json::array()), ConfigError);
    CHECK_THROWS_AS(io::spec_from_json(json{{"x0", "one"}}), ConfigError);
    CHECK_THROWS_AS(io::spec_from_json(json{{"clock", {{"type", "hawkes"}}}}), ConfigError);
    CHECK_THROWS_AS(io::spec_from_json(json{{"clock", {{"type", "renewal"}}}}), ConfigError);
    CHECK_THROWS_AS(io::scheme_from_json(json{{"type", "milstein"}}), ConfigError);
    const auto defaults = io::spec_from_json(json::object());
    CHECK(defaults.diffusivity == 0.5);
}

TEST_CASE("scheme JSON round trip") {
    const SchemeConfig cfg{EulerScheme{0.01, 0.5}, 2.0, {0.0, 1.0, 2.0}};
    const auto back = io::scheme_from_json(io::scheme_to_json(cfg));
    CHECK(std::get<EulerScheme>(back.scheme).dt == 0.01);
    CHECK(back.grid == cfg.grid);
    CHECK(back.horizon == 2.0);
}

TEST_CASE("number formatting is shortest round trip") {
    CHECK(io::format_number(0.1) == "0.1");
    CHECK(io::format_number(-3.0) == "-3");
    CHECK(io::format_number(1e-300) == "1e-300");
    CHECK(io::format_number(NAN) == "nan");
    CHECK(io::format_number(-INFINITY) == "-inf");
}

TEST_CASE("CSV writers") {
    std::ostringstream out;
    io::write_density_csv(out, DensityCurve{{0.0, 0.5}, {1.0, 2.0}, 1.0, Provenance::analytic});
    CHECK(out.str() == "x,value\n0,1\n0.5,2\n");
    std::ostringstream m;
    io::write_moments_csv(m, MomentTable{1.0, {1.0, 0.0, 2.0}});
    CHECK(m.str() == "order,value\n0,1\n1,0\n2,2\n");
    Ensemble ens;
    ens.trajectories.push_back(Trajectory{{0.0, 1.0}, {0.0, 0.25}, {0.5}});
    std::ostringstream t, r;
    io::write_trajectories_csv(t, ens);
    io::write_resets_csv(r, ens);
    CHECK(t.str() == "trajectory,t,x\n0,0,0\n0,1,0.25\n");
    CHECK(r.str() == "trajectory,t\n0,0.5\n");
}

TEST_CASE("file helpers") {
    const auto dir = std::filesystem::temp_directory_path() / "resetsde_io_test";
    std::filesystem::remove_all(dir);
    io::write_file(dir / "nested" / "a.json", "{\"x0\": 2}");
    CHECK(io::read_json_file(dir / "nested" / "a.json")["x0"] == 2);
    io::write_file(dir / "bad.json", "{");
    CHECK_THROWS_AS(io::read_json_file(dir / "bad.json"), ConfigError);
    CHECK_THROWS_AS(io::read_json_file(dir / "missing.json"), std::ios_base::failure);
    std::filesystem::remove_all(dir);
}
