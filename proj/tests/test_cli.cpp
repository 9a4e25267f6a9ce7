#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "transduce/cli.hpp"
#include "transduce/materials.hpp"
#include "transduce/photoelastic.hpp"

using namespace transduce;
using nlohmann::json;

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args, const cli::Environment& env = {})
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err, env);
    return {code, out.str(), err.str()};
}

const std::vector<std::string> kReference{"--material", "BaTiO3", "--pump1", "2.6e-6", "--phonon-ghz", "2"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail)
{
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

}  // namespace

TEST_CASE("estimate-q matches the library bit for bit")
{
    const Outcome o = run_cli(with(with({"estimate-q"}, kReference), {"--json"}));
    REQUIRE(o.code == cli::kOk);
    const json j = json::parse(o.out);
    const MillerChain ch = second_order_photoelasticity(fixtures::batio3(), fixtures::reference_bands());
    CHECK(j["q_eff_m2_per_C"].get<double>() == ch.q_eff.value());
    CHECK(j["eta2_V_m3_per_C2"].get<double>() == ch.eta2.value());
    CHECK(j["miller_Q_V_m3_per_C2"].get<double>() == ch.miller_q.value());
    CHECK(j["n_t"].get<double>() == ch.n[2]);
    CHECK(j["qpm_reduced"].get<bool>() == false);

    const Outcome table = run_cli(with({"estimate-q"}, kReference));
    CHECK(table.code == cli::kOk);
    CHECK(table.out.find("q_eff_m2_per_C") != std::string::npos);

    const Outcome qpm = run_cli(with(with({"estimate-q"}, kReference), {"--json", "--qpm"}));
    CHECK(json::parse(qpm.out)["qpm_reduced"].get<bool>());
}

TEST_CASE("field and sweep-power")
{
    const Outcome f = run_cli({"field", "--power", "1e-3", "--n-mode", "2.26", "--json"});
    REQUIRE(f.code == cli::kOk);
    const json j = json::parse(f.out);
    const PumpGeometry g(units::Power(1e-3), units::Length(1.2e-6), 2.26);
    CHECK(j["field_V_per_m"].get<double>() == peak_field_from_power(g).value());

    const Outcome s = run_cli(with(with({"sweep-power"}, kReference), {"--csv", "--steps", "5"}));
    REQUIRE(s.code == cli::kOk);
    std::istringstream lines(s.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header.rfind("power_W,field_V_per_m", 0) == 0);
    int rows = 0;
    for (std::string line; std::getline(lines, line);) {
        rows += line.empty() ? 0 : 1;
    }
    CHECK(rows == 5);

    CHECK(run_cli(with(with({"sweep-power"}, kReference), {"--p-max", "1000"})).code == cli::kUsageError);
}

TEST_CASE("phasematch and poling")
{
    const Outcome p = run_cli(with(with({"poling"}, kReference), {"--length", "1e-4", "--json"}));
    REQUIRE(p.code == cli::kOk);
    const json j = json::parse(p.out);
    CHECK(j["unpoled_delta_k_rad_per_m"].get<double>() == doctest::Approx(-2464471.6829937359).epsilon(1e-11));
    CHECK(j["poling_sign"].get<long long>() == -1);

    const Outcome sw = run_cli(with(with({"phasematch"}, kReference),
                                    {"--length", "1e-3", "--sweep", "period", "--from", "2.4e-6", "--to",
                                     "2.7e-6", "--step", "1e-7", "--csv"}));
    CHECK(sw.code == cli::kOk);
    CHECK(std::count(sw.out.begin(), sw.out.end(), '\n') == 5);
}

TEST_CASE("verify-thermo")
{
    const Outcome ok = run_cli({"verify-thermo", "--count", "50"});
    CHECK(ok.code == cli::kOk);
    const Outcome bad = run_cli({"verify-thermo", "--model", "1,1,1,1,1,1", "--tol", "-1"});
    CHECK(bad.code == cli::kUsageError);
}

TEST_CASE("exit codes")
{
    CHECK(run_cli({"--help"}).code == cli::kOk);
    CHECK(run_cli({"estimate-q", "--help"}).code == cli::kOk);
    CHECK(run_cli({}).code == cli::kUsageError);
    CHECK(run_cli({"frobnicate"}).code == cli::kUsageError);
    CHECK(run_cli(with({"estimate-q"}, {"--pump1", "2.6e-6"})).code == cli::kUsageError);
    CHECK(run_cli(with(with({"estimate-q"}, kReference), {"--bogus"})).code == cli::kUsageError);
    CHECK(run_cli(with(with({"estimate-q"}, kReference), {"--csv", "--json"})).code == cli::kUsageError);

    const Outcome missing = run_cli({"estimate-q", "--material", "Unobtainium", "--pump1", "2.6e-6", "--phonon-ghz", "2"});
    CHECK(missing.code == cli::kDataError);
    CHECK(missing.err.find("Unobtainium") != std::string::npos);

    CHECK(run_cli({"estimate-q", "--material", "BaTiO3", "--pump1", "1e-6", "--phonon-ghz", "2"}).code ==
          cli::kDataError);
    CHECK(run_cli({"materials", "--db", "/nonexistent.json"}).code == cli::kDataError);
}

TEST_CASE("database resolution")
{
    json db = json::parse(default_materials_json());
    db["materials"][0]["name"] = "Fixture";
    db["materials"][0]["d_eff_m_per_v"] = 2e-11;
    const auto path = std::filesystem::temp_directory_path() / "transduce_cli_db.json";
    std::ofstream(path) << db.dump();

    const cli::Environment env{path.string()};
    const Outcome viaenv = run_cli({"materials", "--json"}, env);
    CHECK(viaenv.code == cli::kOk);
    CHECK(viaenv.out.find("Fixture") != std::string::npos);
    CHECK(viaenv.out.find("BaTiO3") == std::string::npos);

    const Outcome flag = run_cli({"materials", "--db", path.string()});
    CHECK(flag.out.find("Fixture") != std::string::npos);

    // --db wins over the environment.
    const cli::Environment broken{std::string("/nonexistent.json")};
    CHECK(run_cli({"materials", "--db", path.string()}, broken).code == cli::kOk);
    CHECK(run_cli({"materials"}, broken).code == cli::kDataError);

    const Outcome q = run_cli({"estimate-q", "--material", "Fixture", "--pump1", "2.6e-6", "--phonon-ghz", "2",
                               "--json"},
                              env);
    const MillerChain ch = second_order_photoelasticity(fixtures::batio3(), fixtures::reference_bands());
    CHECK(json::parse(q.out)["q_eff_m2_per_C"].get<double>() == doctest::Approx(2.0 * ch.q_eff.value()));
    std::filesystem::remove(path);
}

TEST_CASE("render")
{
    const std::vector<cli::Record> recs{{{"a_m", 1.5}, {"n", 3LL}, {"s", std::string("x,y")}, {"b", true}},
                                        {{"a_m", 0.1}, {"n", -1LL}, {"s", std::string("z")}, {"b", false}}};
    std::ostringstream csv;
    cli::render(csv, recs, cli::OutputFormat::csv);
    CHECK(csv.str() == "a_m,n,s,b\n1.5,3,\"x,y\",true\n0.1,-1,z,false\n");

    std::ostringstream js;
    cli::render(js, recs, cli::OutputFormat::json);
    const json j = json::parse(js.str());
    REQUIRE(j.is_array());
    CHECK(j[1]["a_m"].get<double>() == 0.1);
    CHECK(j[0]["s"] == "x,y");
}
