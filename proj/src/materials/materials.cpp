#include "transduce/materials.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "transduce/errors.hpp"

namespace transduce {

namespace detail {
extern const std::string_view kDefaultMaterialsJson;
}

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

std::string num(double v)
{
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, end) : std::string("?");
}

// ---------------------------------------------------------------------------
// Parsing helpers. Every failure names the material and the JSON field.

struct Ctx
{
    std::string origin;
    std::string material;

    [[noreturn]] void fail(const std::string& field, const std::string& msg) const
    {
        std::string where = origin;
        if (!material.empty()) {
            where += ": material '" + material + "'";
        }
        throw ValidationError(where + ": field '" + field + "': " + msg);
    }
};

// Keys that name a physical quantity carry their SI unit as a suffix. A key
// with the right stem and a different suffix is a unit mismatch, not merely
// an unknown key.
struct UnitKey
{
    std::string_view stem;
    std::string_view si_key;
};

constexpr UnitKey kUnitKeys[] = {
    {"d_eff_", "d_eff_m_per_v"},
    {"v_sound_", "v_sound_m_per_s"},
    {"damage_threshold_", "damage_threshold_w_per_m2"},
    {"valid_range_", "valid_range_m"},
    {"source_wavelength_", "source_wavelength_m"},
};

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed, const Ctx& ctx,
                const std::string& prefix)
{
    for (const auto& [key, _] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) != allowed.end()) {
            continue;
        }
        for (const auto& uk : kUnitKeys) {
            if (key.rfind(uk.stem, 0) == 0 && key != uk.si_key) {
                ctx.fail(prefix + key, "unit mismatch: expected SI field '" + std::string(uk.si_key) + "'");
            }
        }
        ctx.fail(prefix + key, "unknown field");
    }
}

const json& require(const json& obj, const char* key, const Ctx& ctx, const std::string& prefix = "")
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        ctx.fail(prefix + key, "missing required field");
    }
    return *it;
}

double as_number(const json& v, const Ctx& ctx, const std::string& field)
{
    if (!v.is_number()) {
        ctx.fail(field, "expected a number");
    }
    return v.get<double>();
}

std::vector<double> as_numbers(const json& v, const Ctx& ctx, const std::string& field)
{
    if (!v.is_array()) {
        ctx.fail(field, "expected an array of numbers");
    }
    std::vector<double> out;
    for (const auto& e : v) {
        out.push_back(as_number(e, ctx, field));
    }
    return out;
}

DispersionModel parse_dispersion(const json& d, const Ctx& ctx)
{
    if (!d.is_object()) {
        ctx.fail("dispersion", "expected an object");
    }
    check_keys(d, {"kind", "points", "sellmeier", "valid_range_m"}, ctx, "dispersion.");
    const json& kind = require(d, "kind", ctx, "dispersion.");
    if (!kind.is_string()) {
        ctx.fail("dispersion.kind", "expected a string");
    }
    DispersionModel model;
    auto range = as_numbers(require(d, "valid_range_m", ctx, "dispersion."), ctx, "dispersion.valid_range_m");
    if (range.size() != 2) {
        ctx.fail("dispersion.valid_range_m", "expected [lo, hi]");
    }
    model.valid_lo_m = range[0];
    model.valid_hi_m = range[1];

    const auto k = kind.get<std::string>();
    if (k == "tabulated-points") {
        if (d.contains("sellmeier")) {
            ctx.fail("dispersion.sellmeier", "not allowed for kind 'tabulated-points'");
        }
        TabulatedDispersion tab;
        const json& pts = require(d, "points", ctx, "dispersion.");
        if (!pts.is_array()) {
            ctx.fail("dispersion.points", "expected an array of [wavelength_m, n...] rows");
        }
        for (const auto& row : pts) {
            auto vals = as_numbers(row, ctx, "dispersion.points");
            IndexPoint p;
            if (vals.size() == 2) {
                p = {vals[0], {vals[1], vals[1], vals[1]}};
            } else if (vals.size() == 4) {
                p = {vals[0], {vals[1], vals[2], vals[3]}};
            } else {
                ctx.fail("dispersion.points", "row must be [wavelength_m, n] or [wavelength_m, nx, ny, nz]");
            }
            tab.points.push_back(p);
        }
        model.law = std::move(tab);
    } else if (k == "sellmeier") {
        if (d.contains("points")) {
            ctx.fail("dispersion.points", "not allowed for kind 'sellmeier'");
        }
        SellmeierDispersion sm;
        const json& axes = require(d, "sellmeier", ctx, "dispersion.");
        if (!axes.is_array() || axes.size() != 3) {
            ctx.fail("dispersion.sellmeier", "expected three per-axis coefficient objects");
        }
        for (std::size_t a = 0; a < 3; ++a) {
            const json& ax = axes[a];
            const std::string f = "dispersion.sellmeier[" + std::to_string(a) + "]";
            if (!ax.is_object()) {
                ctx.fail(f, "expected {\"B\": [...], \"C_m2\": [...]}");
            }
            check_keys(ax, {"B", "C_m2"}, ctx, f + ".");
            sm.axes[a].b = as_numbers(require(ax, "B", ctx, f + "."), ctx, f + ".B");
            sm.axes[a].c_m2 = as_numbers(require(ax, "C_m2", ctx, f + "."), ctx, f + ".C_m2");
        }
        model.law = std::move(sm);
    } else {
        ctx.fail("dispersion.kind", "unknown kind '" + k + "' (expected tabulated-points or sellmeier)");
    }
    return model;
}

PhotoelasticData parse_photoelastic(const json& p, const Ctx& ctx)
{
    if (!p.is_object()) {
        ctx.fail("photoelastic", "expected an object");
    }
    check_keys(p, {"entries", "note", "source_wavelength_m", "strain_convention"}, ctx, "photoelastic.");
    PhotoelasticData data;
    const json& rows = require(p, "entries", ctx, "photoelastic.");
    if (!rows.is_array() || rows.size() != 6) {
        ctx.fail("photoelastic.entries", "expected a 6x6 array");
    }
    std::array<Voigt6, 6> e{};
    for (std::size_t i = 0; i < 6; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 6) {
            ctx.fail("photoelastic.entries", "expected a 6x6 array");
        }
        for (std::size_t j = 0; j < 6; ++j) {
            const json& v = rows[i][j];
            if (v.is_null()) {
                continue;
            }
            e[i][j] = as_number(v, ctx, "photoelastic.entries");
            if (!std::isfinite(e[i][j])) {
                ctx.fail("photoelastic.entries", "non-finite entry");
            }
            data.known.set(6 * i + j);
        }
    }
    std::string convention = "tensor";
    if (auto it = p.find("strain_convention"); it != p.end()) {
        if (!it->is_string()) {
            ctx.fail("photoelastic.strain_convention", "expected a string");
        }
        convention = it->get<std::string>();
    }
    if (convention == "engineering") {
        // Engineering shear strain is twice the tensor shear component.
        for (auto& row : e) {
            for (std::size_t w = 3; w < 6; ++w) {
                row[w] *= 2.0;
            }
        }
    } else if (convention != "tensor") {
        ctx.fail("photoelastic.strain_convention", "expected 'tensor' or 'engineering'");
    }
    data.tensor = PhotoelasticTensor(e);
    if (auto it = p.find("note"); it != p.end()) {
        if (!it->is_string()) {
            ctx.fail("photoelastic.note", "expected a string");
        }
        data.note = it->get<std::string>();
    }
    if (auto it = p.find("source_wavelength_m"); it != p.end()) {
        data.source_wavelength_m = as_number(*it, ctx, "photoelastic.source_wavelength_m");
    }
    return data;
}

Material parse_material(const json& j, const std::string& origin)
{
    Ctx ctx{origin, ""};
    if (!j.is_object()) {
        ctx.fail("materials[]", "expected an object");
    }
    const json& name = require(j, "name", ctx);
    if (!name.is_string()) {
        ctx.fail("name", "expected a string");
    }
    ctx.material = name.get<std::string>();
    check_keys(j,
               {"name", "dispersion", "photoelastic", "d_eff_m_per_v", "eps_r", "v_sound_m_per_s",
                "damage_threshold_w_per_m2", "qpm_order", "notes"},
               ctx, "");

    Material m;
    m.name = ctx.material;
    m.dispersion = parse_dispersion(require(j, "dispersion", ctx), ctx);
    m.photoelastic = parse_photoelastic(require(j, "photoelastic", ctx), ctx);
    m.d_eff_m_per_v = as_number(require(j, "d_eff_m_per_v", ctx), ctx, "d_eff_m_per_v");

    auto eps = as_numbers(require(j, "eps_r", ctx), ctx, "eps_r");
    if (eps.size() == 1) {
        m.eps_r = {eps[0], eps[0], eps[0]};
    } else if (eps.size() == 3) {
        m.eps_r = {eps[0], eps[1], eps[2]};
    } else {
        ctx.fail("eps_r", "expected [e] or [e1, e2, e3]");
    }

    const json& vs = require(j, "v_sound_m_per_s", ctx);
    if (!vs.is_object()) {
        ctx.fail("v_sound_m_per_s", "expected an object of mode -> speed");
    }
    for (const auto& [mode, v] : vs.items()) {
        m.v_sound_m_per_s[mode] = as_number(v, ctx, "v_sound_m_per_s." + mode);
    }

    m.damage_threshold_w_per_m2 =
        as_number(require(j, "damage_threshold_w_per_m2", ctx), ctx, "damage_threshold_w_per_m2");

    if (auto it = j.find("qpm_order"); it != j.end()) {
        if (!it->is_number_integer()) {
            ctx.fail("qpm_order", "expected a positive integer");
        }
        m.qpm_order = it->get<int>();
    }
    if (auto it = j.find("notes"); it != j.end()) {
        if (!it->is_string()) {
            ctx.fail("notes", "expected a string");
        }
        m.notes = it->get<std::string>();
    }

    auto violations = validate_material(m);
    if (!violations.empty()) {
        const auto& v = violations.front();
        ctx.fail(v.field, v.rule + " (value " + v.value + ")");
    }
    return m;
}

double sellmeier_n(const SellmeierAxis& ax, double lambda)
{
    const double l2 = lambda * lambda;
    double n2 = 1.0;
    for (std::size_t i = 0; i < ax.b.size(); ++i) {
        n2 += ax.b[i] * l2 / (l2 - ax.c_m2[i]);
    }
    return n2 > 0.0 ? std::sqrt(n2) : std::nan("");
}

double tabulated_n(const TabulatedDispersion& tab, double lambda, int axis)
{
    const auto& pts = tab.points;
    if (pts.size() == 1) {
        return pts.front().n[axis];
    }
    auto upper = std::upper_bound(pts.begin(), pts.end(), lambda,
                                  [](double l, const IndexPoint& p) { return l < p.wavelength_m; });
    std::size_t hi = static_cast<std::size_t>(upper - pts.begin());
    hi = std::clamp<std::size_t>(hi, 1, pts.size() - 1);
    const IndexPoint& a = pts[hi - 1];
    const IndexPoint& b = pts[hi];
    if (lambda == a.wavelength_m) {
        return a.n[axis];
    }
    const double t = (lambda - a.wavelength_m) / (b.wavelength_m - a.wavelength_m);
    return a.n[axis] + t * (b.n[axis] - a.n[axis]);
}

double raw_index(const DispersionModel& d, double lambda, int axis)
{
    if (const auto* tab = std::get_if<TabulatedDispersion>(&d.law)) {
        return tabulated_n(*tab, lambda, axis);
    }
    return sellmeier_n(std::get<SellmeierDispersion>(d.law).axes[axis], lambda);
}

void add(std::vector<Violation>& out, std::string field, std::string rule, double value)
{
    out.push_back({std::move(field), std::move(rule), num(value)});
}

}  // namespace

units::Velocity Material::sound_speed(const std::string& mode) const
{
    auto it = v_sound_m_per_s.find(mode);
    if (it == v_sound_m_per_s.end()) {
        throw DataError("material '" + name + "' has no sound speed for acoustic mode '" + mode + "'");
    }
    return units::Velocity(it->second);
}

MaterialDb::MaterialDb(std::vector<Material> materials, std::string source_version)
    : materials_(std::move(materials)), source_version_(std::move(source_version))
{
    std::set<std::string> seen;
    for (const auto& m : materials_) {
        if (!seen.insert(m.name).second) {
            throw ValidationError("duplicate material name '" + m.name + "'");
        }
    }
}

const Material* MaterialDb::find(std::string_view name) const
{
    auto it = std::find_if(materials_.begin(), materials_.end(),
                           [&](const Material& m) { return m.name == name; });
    return it == materials_.end() ? nullptr : &*it;
}

const Material& MaterialDb::at(std::string_view name) const
{
    if (const Material* m = find(name)) {
        return *m;
    }
    throw DataError("unknown material '" + std::string(name) + "'");
}

std::vector<Violation> validate_material(const Material& m)
{
    std::vector<Violation> out;
    if (m.name.empty()) {
        out.push_back({"name", "must be non-empty", "\"\""});
    }

    const auto& d = m.dispersion;
    const bool range_ok = std::isfinite(d.valid_lo_m) && std::isfinite(d.valid_hi_m) &&
                          d.valid_lo_m > 0.0 && d.valid_lo_m < d.valid_hi_m;
    if (!range_ok) {
        add(out, "dispersion.valid_range_m", "requires 0 < lo < hi", d.valid_lo_m);
    }
    if (const auto* tab = std::get_if<TabulatedDispersion>(&d.law)) {
        if (tab->points.empty()) {
            out.push_back({"dispersion.points", "at least one point required", "[]"});
        }
        for (std::size_t i = 0; i < tab->points.size(); ++i) {
            const auto& p = tab->points[i];
            if (!std::isfinite(p.wavelength_m) || p.wavelength_m <= 0.0) {
                add(out, "dispersion.points", "wavelength must be positive", p.wavelength_m);
            }
            if (i > 0 && !(p.wavelength_m > tab->points[i - 1].wavelength_m)) {
                add(out, "dispersion.points", "wavelengths must be strictly increasing", p.wavelength_m);
            }
            for (double n : p.n) {
                if (!std::isfinite(n) || n < 1.0) {
                    add(out, "dispersion", "refractive index must be >= 1", n);
                }
            }
        }
    } else {
        const auto& sm = std::get<SellmeierDispersion>(d.law);
        for (std::size_t a = 0; a < 3; ++a) {
            const auto& ax = sm.axes[a];
            const std::string f = "dispersion.sellmeier[" + std::to_string(a) + "]";
            if (ax.b.size() != ax.c_m2.size()) {
                add(out, f, "B and C_m2 must have equal length", static_cast<double>(ax.b.size()));
                continue;
            }
            for (std::size_t i = 0; i < ax.b.size(); ++i) {
                if (!std::isfinite(ax.b[i]) || !std::isfinite(ax.c_m2[i])) {
                    add(out, f, "coefficients must be finite", ax.b[i]);
                }
            }
        }
    }
    // n >= 1 must hold over the whole declared range, including any
    // end-segment extension of a table.
    if (out.empty() && range_ok) {
        constexpr int kSamples = 257;
        bool reported = false;
        for (int a = 0; a < 3 && !reported; ++a) {
            for (int s = 0; s < kSamples; ++s) {
                const double t = static_cast<double>(s) / (kSamples - 1);
                const double lambda = d.valid_lo_m + t * (d.valid_hi_m - d.valid_lo_m);
                const double n = raw_index(d, lambda, a);
                if (!std::isfinite(n) || n < 1.0) {
                    add(out, "dispersion", "refractive index must be >= 1 over the valid range", n);
                    reported = true;
                    break;
                }
            }
        }
    }

    if (!std::isfinite(m.d_eff_m_per_v)) {
        add(out, "d_eff_m_per_v", "must be finite", m.d_eff_m_per_v);
    }
    for (double e : m.eps_r) {
        if (!std::isfinite(e) || e <= 0.0) {
            add(out, "eps_r", "must be positive", e);
        }
    }
    for (const auto& [mode, v] : m.v_sound_m_per_s) {
        if (!std::isfinite(v) || v <= 0.0) {
            add(out, "v_sound_m_per_s." + mode, "must be positive", v);
        }
    }
    if (!std::isfinite(m.damage_threshold_w_per_m2) || m.damage_threshold_w_per_m2 <= 0.0) {
        add(out, "damage_threshold_w_per_m2", "must be positive", m.damage_threshold_w_per_m2);
    }
    if (m.qpm_order < 1) {
        add(out, "qpm_order", "must be a positive integer", m.qpm_order);
    }
    if (m.photoelastic.source_wavelength_m && !(*m.photoelastic.source_wavelength_m > 0.0)) {
        add(out, "photoelastic.source_wavelength_m", "must be positive", *m.photoelastic.source_wavelength_m);
    }
    return out;
}

MaterialDb parse_materials(std::string_view text, std::string_view origin)
{
    const std::string where(origin);
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(where + ": " + e.what());
    }
    Ctx ctx{where, ""};
    if (!root.is_object()) {
        throw ParseError(where + ": top level must be an object");
    }
    check_keys(root, {"schema", "source_version", "materials"}, ctx, "");
    const json& schema = require(root, "schema", ctx);
    if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion) {
        ctx.fail("schema", "unsupported schema version (expected 1)");
    }
    std::string version;
    if (auto it = root.find("source_version"); it != root.end()) {
        if (!it->is_string()) {
            ctx.fail("source_version", "expected a string");
        }
        version = it->get<std::string>();
    }
    const json& list = require(root, "materials", ctx);
    if (!list.is_array()) {
        ctx.fail("materials", "expected an array");
    }
    std::vector<Material> materials;
    for (const auto& entry : list) {
        materials.push_back(parse_material(entry, where));
    }
    return MaterialDb(std::move(materials), std::move(version));
}

MaterialDb load_materials(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open material database '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_materials(buf.str(), path.string());
}

std::string_view default_materials_json() { return detail::kDefaultMaterialsJson; }

const MaterialDb& default_materials()
{
    static const MaterialDb db = parse_materials(detail::kDefaultMaterialsJson, "<bundled>");
    return db;
}

std::string serialize_materials(const MaterialDb& db)
{
    json root;
    root["schema"] = kSchemaVersion;
    root["source_version"] = db.source_version();
    json list = json::array();
    for (const auto& m : db.materials()) {
        json j;
        j["name"] = m.name;

        json d;
        if (const auto* tab = std::get_if<TabulatedDispersion>(&m.dispersion.law)) {
            d["kind"] = "tabulated-points";
            json pts = json::array();
            for (const auto& p : tab->points) {
                pts.push_back({p.wavelength_m, p.n[0], p.n[1], p.n[2]});
            }
            d["points"] = std::move(pts);
        } else {
            d["kind"] = "sellmeier";
            json axes = json::array();
            for (const auto& ax : std::get<SellmeierDispersion>(m.dispersion.law).axes) {
                axes.push_back({{"B", ax.b}, {"C_m2", ax.c_m2}});
            }
            d["sellmeier"] = std::move(axes);
        }
        d["valid_range_m"] = {m.dispersion.valid_lo_m, m.dispersion.valid_hi_m};
        j["dispersion"] = std::move(d);

        json rows = json::array();
        for (int i = 0; i < 6; ++i) {
            json row = json::array();
            for (int k = 0; k < 6; ++k) {
                if (m.photoelastic.known[6 * i + k]) {
                    row.push_back(m.photoelastic.tensor.entries()[i][k]);
                } else {
                    row.push_back(nullptr);
                }
            }
            rows.push_back(std::move(row));
        }
        json p;
        p["entries"] = std::move(rows);
        p["strain_convention"] = "tensor";
        p["note"] = m.photoelastic.note;
        if (m.photoelastic.source_wavelength_m) {
            p["source_wavelength_m"] = *m.photoelastic.source_wavelength_m;
        }
        j["photoelastic"] = std::move(p);

        j["d_eff_m_per_v"] = m.d_eff_m_per_v;
        j["eps_r"] = m.eps_r;
        json vs = json::object();
        for (const auto& [mode, v] : m.v_sound_m_per_s) {
            vs[mode] = v;
        }
        j["v_sound_m_per_s"] = std::move(vs);
        j["damage_threshold_w_per_m2"] = m.damage_threshold_w_per_m2;
        j["qpm_order"] = m.qpm_order;
        if (!m.notes.empty()) {
            j["notes"] = m.notes;
        }
        list.push_back(std::move(j));
    }
    root["materials"] = std::move(list);
    return root.dump(2);
}

double refractive_index(const Material& m, units::Length wavelength, int axis)
{
    if (axis < 0 || axis > 2) {
        throw ArgumentError("polarization axis " + std::to_string(axis) + " outside 0..2");
    }
    const auto& d = m.dispersion;
    // Wavelengths recovered from angular frequencies land a few ulps off the
    // range ends; those are clamped rather than rejected.
    constexpr double kSlack = 1e-14;
    double lambda = wavelength.value();
    if (lambda < d.valid_lo_m && lambda >= d.valid_lo_m * (1.0 - kSlack)) {
        lambda = d.valid_lo_m;
    } else if (lambda > d.valid_hi_m && lambda <= d.valid_hi_m * (1.0 + kSlack)) {
        lambda = d.valid_hi_m;
    }
    if (!(lambda >= d.valid_lo_m && lambda <= d.valid_hi_m)) {
        throw RangeError("wavelength " + num(lambda) + " m outside the valid range [" + num(d.valid_lo_m) +
                             ", " + num(d.valid_hi_m) + "] m of material '" + m.name + "'",
                         d.valid_lo_m, d.valid_hi_m);
    }
    return raw_index(d, lambda, axis);
}

}  // namespace transduce
