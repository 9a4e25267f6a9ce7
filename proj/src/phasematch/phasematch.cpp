#include "transduce/phasematch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "transduce/constants.hpp"
#include "transduce/errors.hpp"

namespace transduce {

using namespace units;
using constants::c_light;

namespace {

void check_grating(const PolingGrating& g)
{
    if (!(g.period.value() > 0.0) || !std::isfinite(g.period.value())) {
        throw ArgumentError("poling period must be positive");
    }
    if (g.sign != 1 && g.sign != -1) {
        throw ArgumentError("poling sign must be +1 or -1");
    }
}

Wavenumber optical_k(const Material& m, AngularFrequency omega, int axis)
{
    return wavevector_optical(refractive_index(m, vacuum_wavelength(omega), axis), omega);
}

std::vector<double> grid(double from, double to, double step)
{
    if (!(step > 0.0) || !(to >= from) || !std::isfinite(from) || !std::isfinite(to)) {
        throw ArgumentError("sweep range needs from <= to and a positive step");
    }
    const auto count = static_cast<std::size_t>(std::floor((to - from) / step * (1.0 + 1e-12))) + 1;
    if (count > 10'000'000) {
        throw ArgumentError("sweep has too many points");
    }
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = std::min(from + static_cast<double>(i) * step, to);
    }
    return out;
}

}  // namespace

Wavenumber PolingGrating::wavevector() const { return constants::two_pi / period; }

PhaseMatchInput::PhaseMatchInput(MixingBands bands_, const Material& material_, Length length_,
                                 std::optional<PolingGrating> poling_)
    : bands(std::move(bands_)), material(&material_), length(length_), poling(poling_)
{
    if (!(length.value() > 0.0) || !std::isfinite(length.value())) {
        throw ArgumentError("interaction length must be positive");
    }
    if (poling) {
        check_grating(*poling);
    }
}

Wavenumber wavevector_optical(double n, AngularFrequency omega)
{
    if (!(n >= 1.0)) {
        throw ArgumentError("refractive index must be >= 1");
    }
    if (!(omega.value() > 0.0)) {
        throw ArgumentError("optical frequency must be positive");
    }
    return n * omega / c_light;
}

Wavenumber wavevector_acoustic(AngularFrequency omega_m, Velocity v_s)
{
    if (!(v_s.value() > 0.0)) {
        throw ArgumentError("sound speed must be positive");
    }
    return omega_m / v_s;
}

PhaseMatchResult delta_k(const PhaseMatchInput& in)
{
    const Material& m = *in.material;
    const auto& axes = in.bands.axes();
    PhaseMatchResult r;
    r.k_t = optical_k(m, in.bands.omega_t(), axes.transduced);
    r.k_p1 = optical_k(m, in.bands.omega_p1(), axes.pump1);
    r.k_p2 = optical_k(m, in.bands.omega_p2(), axes.pump2);
    r.k_m = wavevector_acoustic(in.bands.omega_m(), m.sound_speed(in.bands.acoustic_mode()));
    if (in.poling) {
        r.k_poling = static_cast<double>(in.poling->sign) * in.poling->wavevector();
        r.lambda_qpm = in.poling->period;
    }
    r.delta_k = r.k_t - r.k_p1 - r.k_p2 - r.k_m - r.k_poling;
    r.efficiency = pm_efficiency(r.delta_k, in.length);
    return r;
}

std::optional<PolingGrating> poling_period(const PhaseMatchInput& in)
{
    PhaseMatchInput unpoled = in;
    unpoled.poling.reset();
    const Wavenumber dk = delta_k(unpoled).delta_k;
    if (dk.value() == 0.0) {
        return std::nullopt;
    }
    return PolingGrating{constants::two_pi / abs(dk), dk.value() > 0.0 ? 1 : -1};
}

double pm_efficiency(Wavenumber delta_k, Length length)
{
    if (!(length.value() > 0.0)) {
        throw ArgumentError("interaction length must be positive");
    }
    const double half = 0.5 * (delta_k * length);
    if (half == 0.0) {
        return 1.0;
    }
    const double s = std::sin(half) / half;
    return s * s;
}

ThreeWaveResidual three_wave_residual(const PhaseMatchInput& in, PumpChoice pump)
{
    const Material& m = *in.material;
    const auto& axes = in.bands.axes();
    const AngularFrequency omega_pump = pump == PumpChoice::pump1 ? in.bands.omega_p1() : in.bands.omega_p2();
    const int axis = pump == PumpChoice::pump1 ? axes.pump1 : axes.pump2;

    ThreeWaveResidual r;
    r.omega_t3 = omega_pump + in.bands.omega_m();
    const Wavenumber k3 = optical_k(m, r.omega_t3, axis);
    const Wavenumber kp = optical_k(m, omega_pump, axis);
    const Wavenumber km = wavevector_acoustic(in.bands.omega_m(), m.sound_speed(in.bands.acoustic_mode()));
    const Wavenumber kg = in.poling ? static_cast<double>(in.poling->sign) * in.poling->wavevector() : Wavenumber(0.0);
    const Wavenumber dk = k3 - kp - km - kg;
    r.delta_k_3wm = dk;
    r.suppression = pm_efficiency(dk, in.length);
    // Matched up to the rounding of the four terms.
    const double scale = std::abs(k3.value()) + std::abs(kp.value()) + std::abs(km.value()) + std::abs(kg.value());
    r.degenerate = std::abs(dk.value()) <= 16.0 * std::numeric_limits<double>::epsilon() * scale;
    return r;
}

std::vector<SweepPoint> sweep_pump_wavelength(const PhaseMatchInput& in, double from_m, double to_m, double step_m)
{
    std::vector<SweepPoint> out;
    for (double lambda : grid(from_m, to_m, step_m)) {
        const AngularFrequency w = angular_frequency(Length(lambda));
        PhaseMatchInput probe(MixingBands(w, w, in.bands.omega_m(), in.bands.axes(), in.bands.acoustic_mode(),
                                          in.bands.strain_component()),
                              *in.material, in.length, in.poling);
        const auto r = delta_k(probe);
        out.push_back({lambda, r.delta_k, r.efficiency});
    }
    return out;
}

std::vector<SweepPoint> sweep_poling_period(const PhaseMatchInput& in, double from_m, double to_m, double step_m)
{
    const int sign = in.poling ? in.poling->sign : 1;
    std::vector<SweepPoint> out;
    for (double period : grid(from_m, to_m, step_m)) {
        if (!(period > 0.0)) {
            throw ArgumentError("poling period must be positive");
        }
        PhaseMatchInput probe = in;
        probe.poling = PolingGrating{Length(period), sign};
        const auto r = delta_k(probe);
        out.push_back({period, r.delta_k, r.efficiency});
    }
    return out;
}

}  // namespace transduce
