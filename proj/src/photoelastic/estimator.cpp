#include "transduce/photoelastic.hpp"

#include <algorithm>
#include <cmath>

#include "transduce/constants.hpp"
#include "transduce/errors.hpp"

namespace transduce {

using namespace units;
using constants::c_light;
using constants::eps0;

namespace {

void check_axis(int axis, const char* band)
{
    if (axis < 0 || axis > 2) {
        throw ArgumentError(std::string("polarization axis of ") + band + " must be 0..2");
    }
}

void check_index(double n)
{
    if (!(n >= 1.0) || !std::isfinite(n)) {
        throw ArgumentError("refractive index must be finite and >= 1");
    }
}

const char* band_name(int b)
{
    static const char* names[] = {"pump1", "pump2", "transduced"};
    return names[b];
}

}  // namespace

MixingBands::MixingBands(AngularFrequency omega_p1, AngularFrequency omega_p2, AngularFrequency omega_m,
                         BandAxes axes, std::string acoustic_mode, VoigtIndex strain_component)
    : omega_p1_(omega_p1),
      omega_p2_(omega_p2),
      omega_m_(omega_m),
      omega_t_(omega_p1 + omega_p2 + omega_m),
      axes_(axes),
      acoustic_mode_(std::move(acoustic_mode)),
      strain_component_(strain_component)
{
    if (!(omega_p1.value() > 0.0) || !(omega_p2.value() > 0.0) || !std::isfinite(omega_t_.value())) {
        throw ArgumentError("pump frequencies must be positive and finite");
    }
    if (!(omega_m.value() >= 0.0)) {
        throw ArgumentError("phonon frequency must be non-negative");
    }
    check_axis(axes.pump1, "pump1");
    check_axis(axes.pump2, "pump2");
    check_axis(axes.transduced, "transduced");
}

MixingBands MixingBands::from_wavelengths(Length pump1, Length pump2, double phonon_hz, BandAxes axes,
                                          std::string acoustic_mode, VoigtIndex strain_component)
{
    if (!(pump1.value() > 0.0) || !(pump2.value() > 0.0)) {
        throw ArgumentError("pump wavelengths must be positive");
    }
    return MixingBands(angular_frequency(pump1), angular_frequency(pump2),
                       AngularFrequency(constants::two_pi * phonon_hz), axes, std::move(acoustic_mode),
                       strain_component);
}

Length vacuum_wavelength(AngularFrequency omega) { return constants::two_pi * c_light / omega; }

AngularFrequency angular_frequency(Length vacuum_wavelength)
{
    return constants::two_pi * c_light / vacuum_wavelength;
}

double eta1_rel(double n)
{
    check_index(n);
    return 1.0 / (n * n);
}

InverseSusceptibility2 eta2_from_deff(NonlinearCoefficient d_eff, double n1, double n2, double n3)
{
    check_index(n1);
    check_index(n2);
    check_index(n3);
    const double n2prod = (n1 * n1) * (n2 * n2) * (n3 * n3);
    return 2.0 * d_eff / (eps0 * eps0) / n2prod;
}

namespace {

double miller_product(double n1, double n2, double n3)
{
    double prod = 1.0;
    for (double n : {n1, n2, n3}) {
        check_index(n);
        if (n == 1.0) {
            throw SingularityError("Miller constant undefined for a band with n = 1");
        }
        prod *= 1.0 - 1.0 / (n * n);
    }
    return prod;
}

}  // namespace

MillerConstant miller_Q(InverseSusceptibility2 eta2, double n1, double n2, double n3)
{
    return -eta2 / miller_product(n1, n2, n3);
}

InverseSusceptibility2 eta2_from_miller(MillerConstant q, double n1, double n2, double n3)
{
    double prod = 1.0;
    for (double n : {n1, n2, n3}) {
        prod *= 1.0 - eta1_rel(n);
    }
    return -q * prod;
}

SecondOrderPhotoelasticity q_eff_from_susceptibility(InverseSusceptibility2 eta2,
                                                     const std::array<double, 3>& eta1,
                                                     const std::array<double, 3>& p)
{
    double sum = 0.0;
    for (std::size_t b = 0; b < 3; ++b) {
        sum += p[b] / (1.0 - eta1[b]);
    }
    return -(eps0 * eta2) * sum;
}

SecondOrderPhotoelasticity q_eff_from_deff(NonlinearCoefficient d_eff, const std::array<double, 3>& n,
                                           const std::array<double, 3>& p)
{
    double n2prod = 1.0;
    double sum = 0.0;
    for (std::size_t b = 0; b < 3; ++b) {
        check_index(n[b]);
        n2prod *= n[b] * n[b];
        sum += p[b] / (1.0 - 1.0 / (n[b] * n[b]));
    }
    return -(2.0 * d_eff / eps0 / n2prod) * sum;
}

double qpm_reduction(int order)
{
    if (order < 1) {
        throw ArgumentError("QPM order must be a positive integer");
    }
    return 2.0 / (order * constants::pi);
}

MillerChain second_order_photoelasticity(const Material& m, const MixingBands& bands, bool qpm_active)
{
    MillerChain chain;
    const auto freqs = bands.optical_frequencies();
    const auto axes = bands.optical_axes();
    const VoigtIndex kl = bands.strain_component();
    for (int b = 0; b < 3; ++b) {
        const VoigtIndex nn = voigt_index(axes[b], axes[b]);
        if (!m.photoelastic.has(nn, kl)) {
            auto [i, j] = voigt_unpack(nn);
            auto [k, l] = voigt_unpack(kl);
            throw DataError("material '" + m.name + "' lacks photoelastic entry p_" + std::to_string(i + 1) +
                            std::to_string(j + 1) + std::to_string(k + 1) + std::to_string(l + 1) +
                            " required by " + band_name(b));
        }
        chain.p[b] = m.photoelastic.tensor(nn, kl);
        chain.n[b] = refractive_index(m, vacuum_wavelength(freqs[b]), axes[b]);
        chain.eta1_rel[b] = eta1_rel(chain.n[b]);
    }
    chain.qpm_reduced = qpm_active;
    chain.d_eff = qpm_active ? qpm_reduction(m.qpm_order) * m.d_eff() : m.d_eff();
    chain.eta2 = eta2_from_deff(chain.d_eff, chain.n[0], chain.n[1], chain.n[2]);
    chain.miller_q = miller_Q(chain.eta2, chain.n[0], chain.n[1], chain.n[2]);
    chain.q_eff = q_eff_from_deff(chain.d_eff, chain.n, chain.p);
    return chain;
}

PumpGeometry::PumpGeometry(Power power_, Length mfd_, double n_mode_) : power(power_), mfd(mfd_), n_mode(n_mode_)
{
    if (!(power.value() >= 0.0) || !std::isfinite(power.value())) {
        throw ArgumentError("pump power must be finite and non-negative");
    }
    if (!(mfd.value() > 0.0) || !std::isfinite(mfd.value())) {
        throw ArgumentError("mode-field diameter must be positive");
    }
    check_index(n_mode);
}

ElectricField peak_field_from_power(const PumpGeometry& g)
{
    return sqrt(16.0 * g.power / (g.n_mode * constants::pi * eps0 * c_light * g.mfd * g.mfd));
}

Intensity peak_intensity(Power power, Length mfd)
{
    PumpGeometry check(power, mfd, 1.0);
    const Length radius = 0.5 * mfd;
    return power / (constants::pi * radius * radius);
}

Power damage_limited_power(const Material& m, Length mfd)
{
    if (!(mfd.value() > 0.0)) {
        throw ArgumentError("mode-field diameter must be positive");
    }
    const Length radius = 0.5 * mfd;
    return m.damage_threshold() * (constants::pi * radius * radius);
}

Dimensionless virtual_photoelasticity(SecondOrderPhotoelasticity q_eff, double eps_r, ElectricField field)
{
    if (!(field.value() >= 0.0)) {
        throw ArgumentError("field magnitude must be non-negative");
    }
    return (2.0 / 3.0) * eps_r * (eps0 * q_eff * field);
}

EnergyDensity interaction_density_3wm(double p_eff, DisplacementField d1, DisplacementField d2, double strain)
{
    return (p_eff * strain / 2.0) * (d1 * d2 / eps0);
}

EnergyDensity interaction_density_4wm(SecondOrderPhotoelasticity q_eff, DisplacementField dp, DisplacementField d1,
                                      DisplacementField d2, double strain)
{
    const Dimensionless q_dp = q_eff * dp;
    return (q_dp * strain / 3.0) * (d1 * d2 / eps0);
}

CouplingBenchmark benchmark_piezo_optomechanical()
{
    return {AngularFrequency(constants::two_pi * 400.0), "piezo-optomechanical transducer, g0 = 2pi x 400 Hz"};
}

CouplingBenchmark benchmark_high_coupling()
{
    return {AngularFrequency(constants::two_pi * 850e3), "high-coupling optomechanical transducer, g0 = 2pi x 850 kHz"};
}

PowerSweep power_sweep(const Material& m, const MixingBands& bands, Length mfd, double n_mode,
                       std::span<const double> powers_w, const CouplingBenchmark& bench, bool qpm_active)
{
    if (powers_w.empty()) {
        throw ArgumentError("power grid is empty");
    }
    if (!(bench.g0_ref.value() > 0.0)) {
        throw ArgumentError("benchmark coupling must be positive");
    }
    PowerSweep sweep;
    sweep.material = m.name;
    sweep.mfd = mfd;
    sweep.n_mode = n_mode;
    sweep.benchmark = bench;
    sweep.damage_limit = damage_limited_power(m, mfd);
    const double max_power = 10.0 * sweep.damage_limit.value();
    for (double p : powers_w) {
        if (!(p >= 0.0 && p <= max_power)) {
            throw ArgumentError("power " + std::to_string(p) + " W outside [0, 10 x damage limit = " +
                                std::to_string(max_power) + " W]");
        }
    }

    sweep.chain = second_order_photoelasticity(m, bands, qpm_active);
    sweep.eps_r = m.eps_r[bands.axes().pump1];
    const VoigtIndex tt = voigt_index(bands.axes().transduced, bands.axes().transduced);
    sweep.p_nominal = std::fabs(m.photoelastic.tensor(tt, bands.strain_component()));
    if (!(sweep.p_nominal > 0.0)) {
        throw DataError("material '" + m.name + "' has no nonzero nominal photoelastic entry for the transduced band");
    }

    sweep.rows.resize(powers_w.size());
    std::transform(powers_w.begin(), powers_w.end(), sweep.rows.begin(), [&](double p) {
        const PumpGeometry g(Power(p), mfd, n_mode);
        DesignRow row;
        row.power = g.power;
        row.field = peak_field_from_power(g);
        row.intensity = peak_intensity(g.power, mfd);
        row.p_virt = std::fabs(virtual_photoelasticity(sweep.chain.q_eff, sweep.eps_r, row.field));
        row.p_virt_over_nominal = row.p_virt / sweep.p_nominal;
        row.damage_fraction = row.intensity.value() / m.damage_threshold_w_per_m2;
        row.g_scaled = row.p_virt_over_nominal * bench.g0_ref;
        return row;
    });
    return sweep;
}

}  // namespace transduce
