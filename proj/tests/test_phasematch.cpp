#include <doctest.h>

#include <numbers>

#include "fixtures.hpp"
#include "transduce/errors.hpp"
#include "transduce/phasematch.hpp"

using namespace transduce;
using namespace transduce::units;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PhaseMatchInput reference_input(double length = 1e-4, std::optional<PolingGrating> g = std::nullopt)
{
    return PhaseMatchInput(fixtures::reference_bands(), fixtures::batio3(), Length(length), g);
}

}  // namespace

TEST_CASE("wavevectors")
{
    const double w = kTwoPi * 2.99792458e8 / 1.31e-6;
    CHECK(wavevector_optical(2.27, AngularFrequency(w)).value() == doctest::Approx(kTwoPi * 2.27 / 1.31e-6).epsilon(1e-15));
    CHECK(wavevector_optical(2.27, AngularFrequency(w)).value() == doctest::Approx(1.088766e7).epsilon(1e-6));
    CHECK(wavevector_acoustic(AngularFrequency(kTwoPi * 2e9), Velocity(5000.0)).value() ==
          doctest::Approx(2.513274e6).epsilon(1e-6));
    CHECK(wavevector_acoustic(AngularFrequency(0.0), Velocity(5000.0)).value() == 0.0);
    CHECK_THROWS_AS(wavevector_optical(0.5, AngularFrequency(w)), ArgumentError);
    CHECK_THROWS_AS(wavevector_optical(1.5, AngularFrequency(0.0)), ArgumentError);
    CHECK_THROWS_AS(wavevector_acoustic(AngularFrequency(1.0), Velocity(0.0)), ArgumentError);
}

TEST_CASE("reference mismatch")
{
    const PhaseMatchResult r = delta_k(reference_input());
    CHECK(r.delta_k.value() == doctest::Approx(-2464471.6829937359).epsilon(1e-11));
    CHECK(r.delta_k.value() == doctest::Approx((r.k_t - r.k_p1 - r.k_p2 - r.k_m).value()));
    CHECK(r.k_poling.value() == 0.0);
    CHECK_FALSE(r.lambda_qpm.has_value());

    const auto g = poling_period(reference_input());
    REQUIRE(g.has_value());
    CHECK(g->sign == -1);
    CHECK(g->period.value() == doctest::Approx(2.5495059856184017e-6).epsilon(1e-11));

    const PhaseMatchResult poled = delta_k(reference_input(1e-4, g));
    CHECK(std::abs(poled.delta_k.value()) < 1e-9 * std::abs(r.delta_k.value()));
    CHECK(poled.efficiency == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(poled.lambda_qpm->value() == g->period.value());
}

TEST_CASE("poling period from a mismatch")
{
    // Grating that cancels a mismatch of dk has period 2 pi / |dk| and the sign of dk.
    CHECK(kTwoPi / 2.548e6 == doctest::Approx(2.466e-6).epsilon(1e-3));
    const PolingGrating g{Length(1e-6), 1};
    CHECK(g.wavevector().value() == doctest::Approx(kTwoPi * 1e6).epsilon(1e-15));
    CHECK_THROWS_AS(PhaseMatchInput(fixtures::reference_bands(), fixtures::batio3(), Length(1e-4),
                                    PolingGrating{Length(-1e-6), 1}),
                    ArgumentError);
    CHECK_THROWS_AS(PhaseMatchInput(fixtures::reference_bands(), fixtures::batio3(), Length(1e-4),
                                    PolingGrating{Length(1e-6), 0}),
                    ArgumentError);
    CHECK_THROWS_AS(PhaseMatchInput(fixtures::reference_bands(), fixtures::batio3(), Length(0.0)), ArgumentError);
}

TEST_CASE("dispersionless medium with no phonon needs no poling")
{
    std::mt19937_64 rng(1);
    const Material m = fixtures::random_dispersive(rng, true);
    const MixingBands b(AngularFrequency(1.2e15), AngularFrequency(1.2e15), AngularFrequency(0.0), BandAxes{0, 0, 0});
    const PhaseMatchInput in(b, m, Length(1e-3));
    CHECK(std::abs(delta_k(in).delta_k.value()) <= 1e-9);
    CHECK(delta_k(in).efficiency == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("poling round trip on random dispersive fixtures")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> ul(0.8e-6, 4e-6), uf(0.1e9, 20e9);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        const Material m = fixtures::random_dispersive(rng);
        const double l1 = ul(rng), l2 = ul(rng);
        const auto bands = MixingBands::from_wavelengths(Length(l1), Length(l2), uf(rng));
        if (vacuum_wavelength(bands.omega_t()).value() < 0.5e-6) {
            continue;
        }
        const PhaseMatchInput in(bands, m, Length(1e-3));
        const double dk0 = delta_k(in).delta_k.value();
        const auto g = poling_period(in);
        REQUIRE(g.has_value());
        CHECK(g->sign == (dk0 > 0 ? 1 : -1));
        const PhaseMatchInput poled(bands, m, Length(1e-3), g);
        CHECK(std::abs(delta_k(poled).delta_k.value()) < 1e-9 * std::abs(dk0));
        ++checked;
    }
    CHECK(checked > 200);
}

TEST_CASE("pm_efficiency")
{
    const Length l(1e-3);
    CHECK(pm_efficiency(Wavenumber(0.0), l) == 1.0);
    CHECK(pm_efficiency(Wavenumber(kTwoPi / 1e-3), l) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(std::abs(pm_efficiency(Wavenumber(kTwoPi / 1e-3), l)) < 1e-12);
    CHECK(pm_efficiency(Wavenumber(std::numbers::pi / 1e-3), l) ==
          doctest::Approx(4.0 / (std::numbers::pi * std::numbers::pi)).epsilon(1e-12));
    // sinc^2(u) = 1 - u^2/3 + ... near zero.
    const double dk = 1e-4 / 1e-3;
    CHECK(pm_efficiency(Wavenumber(dk), l) == doctest::Approx(1.0 - (5e-5 * 5e-5) / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(pm_efficiency(Wavenumber(1.0), Length(0.0)), ArgumentError);

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1e7, 1e7);
    for (int i = 0; i < 500; ++i) {
        const double k = u(rng);
        const double e = pm_efficiency(Wavenumber(k), l);
        CHECK(e == pm_efficiency(Wavenumber(-k), l));
        CHECK(e >= 0.0);
        CHECK(e <= 1.0);
    }
}

TEST_CASE("three-wave residual")
{
    const auto g = poling_period(reference_input());
    const ThreeWaveResidual r = three_wave_residual(reference_input(1e-4, g), PumpChoice::pump1);
    CHECK(r.omega_t3.value() == doctest::Approx(kTwoPi * 2.99792458e8 / 2.6e-6 + kTwoPi * 2e9));
    CHECK(r.delta_k_3wm.value() == doctest::Approx(-48706.862846353383).epsilon(1e-9));
    CHECK(r.suppression == doctest::Approx(0.071014812926503741).epsilon(1e-8));
    CHECK_FALSE(r.degenerate);

    SUBCASE("suppressed for every length from 100 um")
    {
        for (int i = 0; i <= 300; ++i) {
            const double len = 1e-4 * std::pow(1000.0, i / 300.0);
            const auto gi = poling_period(reference_input(len));
            for (PumpChoice pc : {PumpChoice::pump1, PumpChoice::pump2}) {
                CHECK(three_wave_residual(reference_input(len, gi), pc).suppression < 0.5);
            }
        }
    }

    SUBCASE("dispersionless medium is degenerate")
    {
        std::mt19937_64 rng(4);
        const Material m = fixtures::random_dispersive(rng, true);
        const auto bands =
            MixingBands::from_wavelengths(Length(1.55e-6), Length(1.55e-6), 5e9, BandAxes{1, 1, 1});
        const PhaseMatchInput in(bands, m, Length(1e-3));
        const auto gd = poling_period(in);
        REQUIRE(gd.has_value());
        const auto t = three_wave_residual(PhaseMatchInput(bands, m, Length(1e-3), gd), PumpChoice::pump2);
        CHECK(t.degenerate);
        CHECK(t.suppression == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("sweeps")
{
    const auto g = poling_period(reference_input());
    const PhaseMatchInput in = reference_input(1e-3, g);

    const auto by_period = sweep_poling_period(in, 2.4e-6, 2.7e-6, 0.05e-6);
    REQUIRE(by_period.size() == 7);
    CHECK(by_period.front().variable == 2.4e-6);
    for (const auto& pt : by_period) {
        CHECK(pt.efficiency == pm_efficiency(pt.delta_k, Length(1e-3)));
    }

    const auto by_pump = sweep_pump_wavelength(in, 2.5e-6, 2.6e-6, 0.01e-6);
    REQUIRE(by_pump.size() == 11);
    CHECK(by_pump.back().variable == doctest::Approx(2.6e-6));
    CHECK(std::abs(by_pump.back().delta_k.value()) < 1e-3);

    CHECK_THROWS_AS(sweep_poling_period(in, 3e-6, 2e-6, 1e-7), ArgumentError);
    CHECK_THROWS_AS(sweep_pump_wavelength(in, 2e-6, 3e-6, 0.0), ArgumentError);
    CHECK_THROWS_AS(sweep_pump_wavelength(in, 1.0e-6, 1.1e-6, 1e-8), RangeError);
}
