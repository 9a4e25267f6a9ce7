#pragma once

#include <cmath>
#include <random>
#include <string>

#include "transduce/materials.hpp"
#include "transduce/photoelastic.hpp"

namespace fixtures {

inline const transduce::Material& batio3() { return transduce::default_materials().at("BaTiO3"); }

// Degenerate 2600 nm pumps and a 2 GHz phonon.
inline transduce::MixingBands reference_bands()
{
    return transduce::MixingBands::from_wavelengths(transduce::units::Length(2.6e-6),
                                                    transduce::units::Length(2.6e-6), 2e9);
}

// Tabulated normal dispersion over [0.5, 5] um with random slope, optional
// sound speed and every diagonal p entry known.
inline transduce::Material random_dispersive(std::mt19937_64& rng, bool dispersionless = false)
{
    using namespace transduce;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Material m;
    m.name = "random";
    TabulatedDispersion tab;
    std::array<double, 3> n0{};
    for (double& v : n0) {
        v = 1.4 + 1.2 * u(rng);
    }
    const double slope = dispersionless ? 0.0 : 0.01 + 0.1 * u(rng);
    for (int i = 0; i <= 9; ++i) {
        const double lam = 0.5e-6 + 0.5e-6 * i;
        IndexPoint pt{lam, {}};
        for (int a = 0; a < 3; ++a) {
            pt.n[a] = n0[a] + slope * (4.5e-6 - lam) / 4.5e-6;
        }
        tab.points.push_back(pt);
    }
    m.dispersion = DispersionModel{tab, 0.5e-6, 5e-6};
    std::array<Voigt6, 6> p{};
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            p[i][j] = -0.5 + u(rng);
            m.photoelastic.known.set(6 * i + j);
        }
    }
    m.photoelastic.tensor = PhotoelasticTensor(p);
    m.d_eff_m_per_v = 1e-12 + 5e-11 * u(rng);
    m.eps_r = {1.0 + 50 * u(rng), 1.0 + 50 * u(rng), 1.0 + 50 * u(rng)};
    m.v_sound_m_per_s["longitudinal"] = 2000.0 + 8000.0 * u(rng);
    m.damage_threshold_w_per_m2 = 1e12;
    return m;
}

}  // namespace fixtures
