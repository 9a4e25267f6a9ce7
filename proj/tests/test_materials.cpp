#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "transduce/errors.hpp"
#include "transduce/materials.hpp"

using namespace transduce;
using nlohmann::json;

namespace {

json bundled() { return json::parse(default_materials_json()); }

json& first(json& db) { return db["materials"][0]; }

std::string expect_validation(const json& db)
{
    try {
        parse_materials(db.dump());
    } catch (const ValidationError& e) {
        return e.what();
    }
    FAIL("expected ValidationError");
    return {};
}

}  // namespace

TEST_CASE("bundled database")
{
    const MaterialDb& db = default_materials();
    REQUIRE(db.find("BaTiO3") != nullptr);
    CHECK(db.source_version() == "bundled-1");
    const Material& m = db.at("BaTiO3");
    CHECK(validate_material(m).empty());
    CHECK(m.d_eff_m_per_v == 1e-11);
    CHECK(m.eps_r[0] == 5.09);
    CHECK(m.damage_threshold_w_per_m2 == 5.4e12);
    CHECK(m.sound_speed("longitudinal").value() == 5000.0);
    CHECK_THROWS_AS(m.sound_speed("shear"), DataError);
    CHECK(m.photoelastic.has(VoigtIndex(2), VoigtIndex(2)));
    CHECK_FALSE(m.photoelastic.has(VoigtIndex(0), VoigtIndex(0)));
    CHECK(m.photoelastic.source_wavelength_m == 6.33e-7);
    CHECK_THROWS_WITH_AS(db.at("Unobtainium"), doctest::Contains("Unobtainium"), DataError);
}

TEST_CASE("refractive index")
{
    const Material& m = fixtures::batio3();
    using units::Length;
    for (int axis = 0; axis < 3; ++axis) {
        CHECK(refractive_index(m, Length(1.31e-6), axis) == doctest::Approx(2.27).epsilon(0.01 / 2.27));
        CHECK(refractive_index(m, Length(2.6e-6), axis) == doctest::Approx(2.26).epsilon(0.01 / 2.26));
    }
    // Interpolated transduced band of the reference process.
    CHECK(refractive_index(m, Length(1.2999887256313611e-6), 2) ==
          doctest::Approx(2.270077606778051464).epsilon(1e-14));
    // End-segment extension inside the valid range.
    CHECK(refractive_index(m, Length(2.7e-6), 0) == doctest::Approx(2.26 - 0.01 * 0.1e-6 / 1.29e-6));

    SUBCASE("out of range carries the interval")
    {
        try {
            refractive_index(m, Length(500e-9), 0);
            FAIL("expected RangeError");
        } catch (const RangeError& e) {
            CHECK(e.lo() == 1.2e-6);
            CHECK(e.hi() == 2.7e-6);
        }
        CHECK_THROWS_AS(refractive_index(m, Length(3e-6), 0), RangeError);
        CHECK_THROWS_AS(refractive_index(m, Length(2.7e-6 * (1 + 1e-9)), 0), RangeError);
        // Round-trip rounding at the range end is tolerated.
        CHECK(refractive_index(m, Length(2.7000000000000004e-6), 0) == refractive_index(m, Length(2.7e-6), 0));
        CHECK_THROWS_AS(refractive_index(m, Length(2e-6), 3), ArgumentError);
    }

    SUBCASE("vacuum Sellmeier is exactly 1")
    {
        Material vac;
        vac.name = "vacuum";
        SellmeierDispersion s;
        for (auto& ax : s.axes) {
            ax.b = {0.0};
            ax.c_m2 = {0.0};
        }
        vac.dispersion = DispersionModel{s, 1e-7, 1e-5};
        for (double lam : {1e-7, 1e-6, 3.3e-6, 1e-5}) {
            CHECK(refractive_index(vac, Length(lam), 1) == 1.0);
        }
    }

    SUBCASE("continuity and lower bound across the table")
    {
        double prev = refractive_index(m, Length(1.2e-6), 0);
        for (int i = 1; i <= 1000; ++i) {
            const double lam = 1.2e-6 + 1.5e-6 * i / 1000.0;
            const double n = refractive_index(m, Length(lam), 0);
            CHECK(n >= 1.0);
            CHECK(std::abs(n - prev) < 1e-4);
            prev = n;
        }
    }
}

TEST_CASE("parse_materials validation")
{
    SUBCASE("empty list loads")
    {
        const MaterialDb db = parse_materials(R"({"schema":1,"source_version":"x","materials":[]})");
        CHECK(db.empty());
    }

    SUBCASE("negative damage threshold names the field")
    {
        json db = bundled();
        first(db)["damage_threshold_w_per_m2"] = -1.0;
        const std::string msg = expect_validation(db);
        CHECK(msg.find("damage_threshold_w_per_m2") != std::string::npos);
        CHECK(msg.find("BaTiO3") != std::string::npos);
    }

    SUBCASE("unit-mismatched key")
    {
        json db = bundled();
        auto& m = first(db);
        m["d_eff_pm_per_v"] = 10.0;
        m.erase("d_eff_m_per_v");
        CHECK(expect_validation(db).find("d_eff_pm_per_v") != std::string::npos);
    }

    SUBCASE("unknown key")
    {
        json db = bundled();
        first(db)["colour"] = "blue";
        CHECK(expect_validation(db).find("colour") != std::string::npos);
    }

    SUBCASE("missing field")
    {
        json db = bundled();
        first(db).erase("eps_r");
        CHECK(expect_validation(db).find("eps_r") != std::string::npos);
    }

    SUBCASE("non-increasing wavelengths")
    {
        json db = bundled();
        first(db)["dispersion"]["points"][1][0] = 1.31e-6;
        CHECK(expect_validation(db).find("dispersion") != std::string::npos);
    }

    SUBCASE("qpm order")
    {
        json db = bundled();
        first(db)["qpm_order"] = 0;
        CHECK(expect_validation(db).find("qpm_order") != std::string::npos);
    }

    SUBCASE("duplicate names")
    {
        json db = bundled();
        db["materials"].push_back(first(db));
        CHECK_THROWS_AS(parse_materials(db.dump()), ValidationError);
    }

    SUBCASE("malformed text")
    {
        CHECK_THROWS_AS(parse_materials("{\"schema\": 1,"), ParseError);
        CHECK_THROWS_AS(load_materials("/nonexistent/materials.json"), Error);
    }

    SUBCASE("engineering strain convention doubles shear columns")
    {
        json db = bundled();
        auto& p = first(db)["photoelastic"];
        p["strain_convention"] = "engineering";
        p["entries"][0][5] = 0.05;
        p["entries"][2][2] = 0.77;
        const MaterialDb out = parse_materials(db.dump());
        const auto& t = out.at("BaTiO3").photoelastic.tensor;
        CHECK(t.at(0, 0, 0, 1) == doctest::Approx(0.1));
        CHECK(t.at(2, 2, 2, 2) == 0.77);
    }
}

TEST_CASE("validate_material")
{
    Material m = fixtures::batio3();

    SUBCASE("table dipping below one gives exactly one violation")
    {
        auto& tab = std::get<TabulatedDispersion>(m.dispersion.law);
        tab.points[1].n[1] = 0.9;
        const auto v = validate_material(m);
        REQUIRE(v.size() == 1);
        CHECK(v[0].field.find("dispersion") != std::string::npos);
    }

    SUBCASE("non-finite photoelastic data is not representable")
    {
        std::array<Voigt6, 6> e{};
        e[0][0] = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(PhotoelasticTensor{e}, ArgumentError);
    }

    SUBCASE("non-positive eps_r")
    {
        m.eps_r[2] = -0.5;
        const auto v = validate_material(m);
        REQUIRE(v.size() == 1);
        CHECK(v[0].field.find("eps_r") != std::string::npos);
    }
}

TEST_CASE("serialize round trip is bit exact")
{
    const MaterialDb& a = default_materials();
    const std::string text = serialize_materials(a);
    const MaterialDb b = parse_materials(text);
    CHECK(serialize_materials(b) == text);
    REQUIRE(b.size() == a.size());
    const Material& ma = a.materials()[0];
    const Material& mb = b.materials()[0];
    CHECK(ma.name == mb.name);
    CHECK(ma.d_eff_m_per_v == mb.d_eff_m_per_v);
    CHECK(ma.eps_r == mb.eps_r);
    CHECK(ma.photoelastic.known == mb.photoelastic.known);
    CHECK(ma.photoelastic.tensor.entries() == mb.photoelastic.tensor.entries());
    CHECK(ma.v_sound_m_per_s == mb.v_sound_m_per_s);
    for (double lam = 1.2e-6; lam <= 2.7e-6; lam += 0.1e-6) {
        CHECK(refractive_index(ma, units::Length(lam), 0) == refractive_index(mb, units::Length(lam), 0));
    }

    SUBCASE("through a file")
    {
        const auto path = std::filesystem::temp_directory_path() / "transduce_roundtrip.json";
        std::ofstream(path) << text;
        const MaterialDb c = load_materials(path);
        CHECK(serialize_materials(c) == text);
        std::filesystem::remove(path);
    }

    SUBCASE("random dispersive fixtures")
    {
        std::mt19937_64 rng(3);
        std::vector<Material> ms;
        for (int i = 0; i < 5; ++i) {
            Material m = fixtures::random_dispersive(rng);
            m.name = "r" + std::to_string(i);
            ms.push_back(m);
        }
        const MaterialDb db(ms, "random");
        const std::string t1 = serialize_materials(db);
        CHECK(serialize_materials(parse_materials(t1)) == t1);
    }
}
