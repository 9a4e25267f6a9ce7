#pragma once

#include <optional>
#include <vector>

#include "transduce/materials.hpp"
#include "transduce/photoelastic.hpp"
#include "transduce/units.hpp"

namespace transduce {

// A first-order poling grating. Its wavevector enters the mismatch as
// -sign * 2 pi / period.
struct PolingGrating
{
    units::Length period;
    int sign = 1;

    units::Wavenumber wavevector() const;
};

// Collinear interaction along z over a medium of length `length`.
struct PhaseMatchInput
{
    // Throws ArgumentError for non-positive length or an invalid grating.
    PhaseMatchInput(MixingBands bands, const Material& material, units::Length length,
                    std::optional<PolingGrating> poling = std::nullopt);

    MixingBands bands;
    const Material* material;
    units::Length length;
    std::optional<PolingGrating> poling;
};

struct PhaseMatchResult
{
    units::Wavenumber k_t;
    units::Wavenumber k_p1;
    units::Wavenumber k_p2;
    units::Wavenumber k_m;
    units::Wavenumber k_poling;  // signed grating contribution, zero when unpoled
    units::Wavenumber delta_k;
    std::optional<units::Length> lambda_qpm;
    double efficiency = 0.0;
};

// n omega / c. Throws ArgumentError for n < 1 or omega <= 0.
units::Wavenumber wavevector_optical(double n, units::AngularFrequency omega);

// omega_m / v_s. Throws ArgumentError for v_s <= 0.
units::Wavenumber wavevector_acoustic(units::AngularFrequency omega_m, units::Velocity v_s);

// delta_k = k_t - k_p1 - k_p2 - k_m - sign 2 pi / period, with efficiency
// over the input length. Throws RangeError if a band leaves the dispersion
// range and DataError if the acoustic mode has no tabulated speed.
PhaseMatchResult delta_k(const PhaseMatchInput& in);

// Grating that cancels the unpoled mismatch of `in` (any grating already
// present in `in` is ignored). Returns nullopt when the unpoled mismatch is
// exactly zero and no poling is needed.
std::optional<PolingGrating> poling_period(const PhaseMatchInput& in);

// sinc^2(delta_k L / 2), equal to 1 at delta_k = 0. Throws ArgumentError for
// L <= 0.
double pm_efficiency(units::Wavenumber delta_k, units::Length length);

enum class PumpChoice { pump1, pump2 };

struct ThreeWaveResidual
{
    units::AngularFrequency omega_t3;
    units::Wavenumber delta_k_3wm;
    double suppression = 0.0;  // pm_efficiency of the three-wave process
    bool degenerate = false;   // three-wave process is phase matched too, to rounding
};

// Mismatch of the competing three-wave process omega_t3 = omega_pump + omega_m
// under the grating present in `in`. The scattered light keeps the pump's
// polarization axis.
ThreeWaveResidual three_wave_residual(const PhaseMatchInput& in, PumpChoice pump);

struct SweepPoint
{
    double variable = 0.0;  // SI value of the swept quantity
    units::Wavenumber delta_k;
    double efficiency = 0.0;
};

// Both pumps set to each wavelength in turn (degenerate pumping), everything
// else from `in`.
std::vector<SweepPoint> sweep_pump_wavelength(const PhaseMatchInput& in, double from_m, double to_m,
                                              double step_m);

// Grating period swept with the sign of the grating in `in` (or +1 when
// unpoled).
std::vector<SweepPoint> sweep_poling_period(const PhaseMatchInput& in, double from_m, double to_m,
                                            double step_m);

}  // namespace transduce
