#pragma once

#include <array>
#include <bitset>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "transduce/units.hpp"
#include "transduce/voigt.hpp"

namespace transduce {

// One row of a refractive-index table: vacuum wavelength and n per axis.
struct IndexPoint
{
    double wavelength_m = 0.0;
    std::array<double, 3> n{};
};

struct TabulatedDispersion
{
    std::vector<IndexPoint> points;
};

// n^2(lambda) = 1 + sum_i B_i lambda^2 / (lambda^2 - C_i), with C_i in m^2.
struct SellmeierAxis
{
    std::vector<double> b;
    std::vector<double> c_m2;
};

struct SellmeierDispersion
{
    std::array<SellmeierAxis, 3> axes;
};

struct DispersionModel
{
    std::variant<TabulatedDispersion, SellmeierDispersion> law;
    double valid_lo_m = 0.0;
    double valid_hi_m = 0.0;

    bool is_tabulated() const { return std::holds_alternative<TabulatedDispersion>(law); }
};

struct PhotoelasticData
{
    PhotoelasticTensor tensor;
    // Entries absent from the source file are zero here and unset in `known`,
    // indexed 6 * Voigt(ij) + Voigt(kl).
    std::bitset<36> known;
    std::string note;
    std::optional<double> source_wavelength_m;

    bool has(VoigtIndex ij, VoigtIndex kl) const { return known[6 * ij.value() + kl.value()]; }
};

struct Material
{
    std::string name;
    DispersionModel dispersion;
    PhotoelasticData photoelastic;
    double d_eff_m_per_v = 0.0;
    std::array<double, 3> eps_r{1.0, 1.0, 1.0};
    std::map<std::string, double> v_sound_m_per_s;
    double damage_threshold_w_per_m2 = 0.0;
    int qpm_order = 1;
    std::string notes;

    units::NonlinearCoefficient d_eff() const { return units::NonlinearCoefficient(d_eff_m_per_v); }
    units::Intensity damage_threshold() const { return units::Intensity(damage_threshold_w_per_m2); }

    // Throws DataError naming the mode when no speed is tabulated for it.
    units::Velocity sound_speed(const std::string& mode) const;
};

class MaterialDb
{
public:
    MaterialDb() = default;
    // Throws ValidationError on duplicate names.
    MaterialDb(std::vector<Material> materials, std::string source_version);

    const Material* find(std::string_view name) const;
    // Throws DataError naming the material when absent.
    const Material& at(std::string_view name) const;

    const std::vector<Material>& materials() const { return materials_; }
    const std::string& source_version() const { return source_version_; }
    std::size_t size() const { return materials_.size(); }
    bool empty() const { return materials_.empty(); }

private:
    std::vector<Material> materials_;
    std::string source_version_;
};

struct Violation
{
    std::string field;
    std::string rule;
    std::string value;
};

// Empty iff every Material invariant holds. Does not check mode-specific
// lookups such as v_sound for a particular acoustic mode.
std::vector<Violation> validate_material(const Material& m);

// Parses the JSON database text. Throws ParseError on malformed input and
// ValidationError (naming material and field) on schema or unit violations.
MaterialDb parse_materials(std::string_view text, std::string_view origin = "<memory>");
MaterialDb load_materials(const std::filesystem::path& path);

// The database compiled into the library (contains the BaTiO3 fixture).
const MaterialDb& default_materials();
std::string_view default_materials_json();

// Inverse of parse_materials; numbers are written with round-trip precision.
std::string serialize_materials(const MaterialDb& db);

// Refractive index along `axis` at vacuum wavelength. Tabulated data is
// interpolated piecewise-linearly; inside the declared validity range but
// beyond the first or last table point the end segment is extended.
// Throws RangeError (carrying the valid interval) outside the range.
double refractive_index(const Material& m, units::Length wavelength, int axis);

}  // namespace transduce
