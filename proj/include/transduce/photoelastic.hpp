#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "transduce/materials.hpp"
#include "transduce/units.hpp"
#include "transduce/voigt.hpp"

namespace transduce {

// Polarization axis (0..2) of each optical band.
struct BandAxes
{
    int pump1 = 0;
    int pump2 = 1;
    int transduced = 2;
};

// The four-wave-mixing frequency set. The transduced frequency is always
// derived as omega_p1 + omega_p2 + omega_m, never supplied.
class MixingBands
{
public:
    // Throws ArgumentError for non-positive pump frequencies, negative phonon
    // frequency or an axis outside 0..2.
    MixingBands(units::AngularFrequency omega_p1, units::AngularFrequency omega_p2,
                units::AngularFrequency omega_m, BandAxes axes = {},
                std::string acoustic_mode = "longitudinal", VoigtIndex strain_component = VoigtIndex(2));

    // Pumps given as vacuum wavelengths, phonon as an ordinary frequency (Hz).
    static MixingBands from_wavelengths(units::Length pump1, units::Length pump2, double phonon_hz,
                                        BandAxes axes = {}, std::string acoustic_mode = "longitudinal",
                                        VoigtIndex strain_component = VoigtIndex(2));

    units::AngularFrequency omega_p1() const { return omega_p1_; }
    units::AngularFrequency omega_p2() const { return omega_p2_; }
    units::AngularFrequency omega_m() const { return omega_m_; }
    units::AngularFrequency omega_t() const { return omega_t_; }
    const BandAxes& axes() const { return axes_; }
    const std::string& acoustic_mode() const { return acoustic_mode_; }
    VoigtIndex strain_component() const { return strain_component_; }

    // Frequencies and axes in mixing order (pump1, pump2, transduced).
    std::array<units::AngularFrequency, 3> optical_frequencies() const { return {omega_p1_, omega_p2_, omega_t_}; }
    std::array<int, 3> optical_axes() const { return {axes_.pump1, axes_.pump2, axes_.transduced}; }

private:
    units::AngularFrequency omega_p1_;
    units::AngularFrequency omega_p2_;
    units::AngularFrequency omega_m_;
    units::AngularFrequency omega_t_;
    BandAxes axes_;
    std::string acoustic_mode_;
    VoigtIndex strain_component_;
};

// Vacuum wavelength 2 pi c / omega.
units::Length vacuum_wavelength(units::AngularFrequency omega);
units::AngularFrequency angular_frequency(units::Length vacuum_wavelength);

// Every intermediate of the Miller's-rule estimate, in mixing order.
struct MillerChain
{
    std::array<double, 3> n{};
    std::array<double, 3> eta1_rel{};   // eps0 * eta1 = 1 / n^2
    std::array<double, 3> p{};          // p_nn,kl per band
    units::NonlinearCoefficient d_eff;  // after any QPM reduction
    bool qpm_reduced = false;
    units::InverseSusceptibility2 eta2;
    units::MillerConstant miller_q;
    units::SecondOrderPhotoelasticity q_eff;  // signed; negative for positive inputs
};

// 1 / n^2. Throws ArgumentError for n < 1.
double eta1_rel(double n);

// eta2 = 2 d_eff / (eps0^2 n1^2 n2^2 n3^2).
units::InverseSusceptibility2 eta2_from_deff(units::NonlinearCoefficient d_eff, double n1, double n2,
                                             double n3);

// Q = -eta2 / prod(1 - 1/n_i^2). Throws SingularityError if any n_i == 1.
units::MillerConstant miller_Q(units::InverseSusceptibility2 eta2, double n1, double n2, double n3);

// Forward Miller relation: eta2 = -Q prod(1 - 1/n_i^2).
units::InverseSusceptibility2 eta2_from_miller(units::MillerConstant q, double n1, double n2, double n3);

// q = -eps0 eta2 sum_n p_n / (1 - eps0 eta1_n), from the inverse susceptibilities.
units::SecondOrderPhotoelasticity q_eff_from_susceptibility(units::InverseSusceptibility2 eta2,
                                                            const std::array<double, 3>& eta1_rel,
                                                            const std::array<double, 3>& p);

// q = -(2 d_eff / (eps0 prod n^2)) sum_n p_n / (1 - 1/n_n^2), from tabulated parameters.
units::SecondOrderPhotoelasticity q_eff_from_deff(units::NonlinearCoefficient d_eff,
                                                  const std::array<double, 3>& n,
                                                  const std::array<double, 3>& p);

// Fourier reduction 2 / (order pi) of d_eff under quasi-phase matching.
double qpm_reduction(int order);

// Full chain for a material and band set. p_nn,kl is read at (axis of band n,
// strain component). With qpm_active, d_eff is reduced by the material's QPM
// order. Throws DataError naming the missing p entry, RangeError when a band
// falls outside the dispersion range.
MillerChain second_order_photoelasticity(const Material& m, const MixingBands& bands, bool qpm_active = false);

struct PumpGeometry
{
    // Throws ArgumentError for negative power, non-positive MFD or n_mode < 1.
    PumpGeometry(units::Power power, units::Length mfd, double n_mode);

    units::Power power;
    units::Length mfd;
    double n_mode;
};

// |E| = sqrt(16 P / (n pi eps0 c MFD^2)).
units::ElectricField peak_field_from_power(const PumpGeometry& g);

// I = P / (pi (MFD/2)^2). Throws ArgumentError for P < 0 or MFD <= 0.
units::Intensity peak_intensity(units::Power power, units::Length mfd);

// Power at which peak_intensity reaches the material's damage threshold.
units::Power damage_limited_power(const Material& m, units::Length mfd);

// p_virt = (2/3) eps0 q_eff eps_r |E|. Throws ArgumentError for a negative
// field magnitude.
units::Dimensionless virtual_photoelasticity(units::SecondOrderPhotoelasticity q_eff, double eps_r,
                                             units::ElectricField field);

// Three-wave interaction energy density (1 / (2 eps0)) p D1 D2 x.
units::EnergyDensity interaction_density_3wm(double p_eff, units::DisplacementField d1,
                                             units::DisplacementField d2, double strain);

// Four-wave interaction energy density (1 / (3 eps0)) q Dp D1 D2 x.
units::EnergyDensity interaction_density_4wm(units::SecondOrderPhotoelasticity q_eff,
                                             units::DisplacementField dp, units::DisplacementField d1,
                                             units::DisplacementField d2, double strain);

// Reference single-photon coupling rate a design is scaled against.
struct CouplingBenchmark
{
    units::AngularFrequency g0_ref;
    std::string label;
};

// Reported transducer couplings. Carried for comparison only; nothing here
// is derived from them.
CouplingBenchmark benchmark_piezo_optomechanical();  // 2 pi x 400 Hz
CouplingBenchmark benchmark_high_coupling();         // 2 pi x 850 kHz

struct DesignRow
{
    units::Power power;
    units::ElectricField field;
    units::Intensity intensity;
    double p_virt = 0.0;
    double p_virt_over_nominal = 0.0;
    double damage_fraction = 0.0;  // intensity / damage threshold
    // Benchmark coupling scaled by p_virt / p_nominal. An extrapolation, not a
    // prediction.
    units::AngularFrequency g_scaled;
};

struct PowerSweep
{
    std::string material;
    MillerChain chain;
    double eps_r = 0.0;
    double p_nominal = 0.0;
    units::Length mfd;
    double n_mode = 1.0;
    units::Power damage_limit;
    CouplingBenchmark benchmark;
    std::vector<DesignRow> rows;
};

// Tabulates the virtual photoelasticity and derived columns over a power
// grid. p_nominal is the material's first-order p at (transduced axis,
// strain component); eps_r is taken along the pump1 axis. Throws
// ArgumentError for an empty grid or any power outside [0, 10 x damage limit].
PowerSweep power_sweep(const Material& m, const MixingBands& bands, units::Length mfd, double n_mode,
                       std::span<const double> powers_w, const CouplingBenchmark& bench,
                       bool qpm_active = false);

}  // namespace transduce
