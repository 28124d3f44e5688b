#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "brillouin/config.hpp"
#include "brillouin/errors.hpp"
#include "brillouin/table.hpp"

using namespace brillouin;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents, const std::string& name) {
        path = name;
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("defaults reproduce the nanowire operating point") {
    const ScenarioConfig cfg;
    validate(cfg);
    CHECK(cfg.f_s_ghz() == 1.0);
    CHECK(cfg.f_as_ghz() == Complex(1.0, 0.0));
    CHECK(cfg.pump_field().n_p == 1e6);
    CHECK(cfg.model().drive.u == 1e6);
    CHECK(cfg.model().couplings.g_s == Complex(1e-3, 0.0));
    CHECK(cfg.environment().phonon_freq == 1e10);
    CHECK(cfg.environment().Gamma == 1e6);
}

TEST_CASE("detuning maps onto the rotating-frame parameters") {
    const ScenarioConfig cfg;
    const StokesParams s = cfg.stokes_at(1.5);
    CHECK(s.delta_omega_s == 13.0);
    CHECK(s.Omega_s == 10.0);
    CHECK(s.detuning() == 1.5);
    const AntiStokesParams as = cfg.antistokes_at(-2.0);
    CHECK(as.delta_omega_as == 6.0);
    CHECK(as.detuning() == -2.0);
}

TEST_CASE("config file round trip") {
    const TempFile file(R"(# scenario exercising every section
[branches]
omega1_ghz = 210.0   ; scattered branch
omega2_ghz = 90.0
v_g_ghz_per_k = 2.0

[phonon]
omega_ghz = 12.5

[coupling]
g_s_mhz = 2.0
g_as_mhz = 0.5

[pump]
n_p_in_per_s = 2.5e11
u_mhz = 4.0
omega_hz = 1.1e15
k = 450.0

[sweep]
min_ghz = -3.0
max_ghz = 3.0
points = 31

[thermal]
min_k = 0.002
max_k = 200.0
points = 11

[fock]
n_max = 24

[environment]
temperature_k = 0.02
gamma_phonon_mhz = 2.0
gamma_photon_mhz = 0.05
strong_coupling_ratio = 20.0

[output]
format = json
)",
                        "config_roundtrip.ini");
    const ScenarioConfig cfg = load_config(file.path);
    CHECK(cfg.omega1_ghz == 210.0);
    CHECK(cfg.v_g_ghz_per_k == 2.0);
    CHECK(cfg.phonon_omega_ghz == 12.5);
    CHECK(cfg.pump_field().n_p == doctest::Approx(62500.0).epsilon(1e-12));
    CHECK(cfg.f_s_ghz() == doctest::Approx(2e-3 * 250.0).epsilon(1e-12));
    CHECK(cfg.sweep.points == 31);
    CHECK(cfg.thermal.max == 200.0);
    CHECK(cfg.n_max == 24);
    CHECK(cfg.strong_coupling_ratio == 20.0);
    CHECK(cfg.format == "json");
}

TEST_CASE("config parser rejects malformed input") {
    SUBCASE("unknown key") {
        const TempFile file("[coupling]\ng_s_ghz = 1.0\n", "config_badkey.ini");
        CHECK_THROWS_AS(load_config(file.path), ConfigError);
    }
    SUBCASE("unknown section") {
        const TempFile file("[drive]\nu_mhz = 1.0\n", "config_badsection.ini");
        CHECK_THROWS_AS(load_config(file.path), ConfigError);
    }
    SUBCASE("bad number") {
        const TempFile file("[fock]\nn_max = many\n", "config_badnum.ini");
        CHECK_THROWS_AS(load_config(file.path), ConfigError);
    }
    SUBCASE("non-integer point count") {
        const TempFile file("[sweep]\npoints = 2.5\n", "config_badint.ini");
        CHECK_THROWS_AS(load_config(file.path), ConfigError);
    }
    SUBCASE("missing equals") {
        const TempFile file("[sweep]\npoints 31\n", "config_noeq.ini");
        CHECK_THROWS_AS(load_config(file.path), ConfigError);
    }
    SUBCASE("unterminated section") {
        const TempFile file("[sweep\npoints = 3\n", "config_nosec.ini");
        CHECK_THROWS_AS(load_config(file.path), ConfigError);
    }
    SUBCASE("missing file") { CHECK_THROWS_AS(load_config("does_not_exist.ini"), ConfigError); }
}

TEST_CASE("validation catches inconsistent scenarios") {
    const auto expect_reject = [](auto&& mutate) {
        ScenarioConfig cfg;
        mutate(cfg);
        CHECK_THROWS_AS(validate(cfg), ConfigError);
    };
    expect_reject([](ScenarioConfig& c) { c.sweep.points = 1; });
    expect_reject([](ScenarioConfig& c) { c.sweep.min = c.sweep.max; });
    expect_reject([](ScenarioConfig& c) { c.thermal.min = -1.0; });
    expect_reject([](ScenarioConfig& c) { c.n_max = 0; });
    expect_reject([](ScenarioConfig& c) { c.n_max = 61; });
    expect_reject([](ScenarioConfig& c) { c.u_mhz = 0.0; });
    expect_reject([](ScenarioConfig& c) { c.n_p_in_per_s = -1.0; });
    expect_reject([](ScenarioConfig& c) { c.v_g_ghz_per_k = 0.0; });
    expect_reject([](ScenarioConfig& c) { c.phonon_omega_ghz = 0.0; });
    expect_reject([](ScenarioConfig& c) { c.temperature_k = 0.0; });
    expect_reject([](ScenarioConfig& c) { c.gamma_phonon_mhz = -1.0; });
    expect_reject([](ScenarioConfig& c) { c.format = "xml"; });
}

TEST_CASE("table formatting") {
    CHECK(format_sig9(0.123456789123) == "0.123456789");
    CHECK(format_sig9(-5.0) == "-5");
    CHECK(format_sig9(9.94987437106619954) == "9.94987437");

    Table table;
    table.header = {"x", "y", "status"};
    table.rows.push_back({1.0, 0.5, std::string("ok")});
    table.rows.push_back(
        {2.0, std::numeric_limits<Real>::quiet_NaN(), std::string("unstable")});

    SUBCASE("csv is byte-stable") {
        std::ostringstream first, second;
        write_csv(table, first);
        write_csv(table, second);
        CHECK(first.str() == second.str());
        CHECK(first.str() == "x,y,status\n1,0.5,ok\n2,nan,unstable\n");
    }
    SUBCASE("json mirrors the rows, NaN becomes null") {
        std::ostringstream out;
        write_json(table, out);
        CHECK(out.str() ==
              "[\n  {\"x\":1.0,\"y\":0.5,\"status\":\"ok\"},\n"
              "  {\"x\":2.0,\"y\":null,\"status\":\"unstable\"}\n]\n");
    }
    SUBCASE("unknown format rejected") {
        std::ostringstream out;
        CHECK_THROWS_AS(write_table(table, "yaml", out), std::invalid_argument);
    }
}
