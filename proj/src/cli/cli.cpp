#include "transduce/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "transduce/constants.hpp"
#include "transduce/errors.hpp"
#include "transduce/materials.hpp"
#include "transduce/phasematch.hpp"
#include "transduce/photoelastic.hpp"
#include "transduce/report.hpp"
#include "transduce/thermo.hpp"

namespace transduce::cli {

using namespace units;

namespace {

struct Common
{
    std::string db;
    bool csv = false;
    bool json = false;

    OutputFormat format() const
    {
        if (csv && json) {
            throw ArgumentError("--csv and --json are mutually exclusive");
        }
        return csv ? OutputFormat::csv : json ? OutputFormat::json : OutputFormat::table;
    }
};

struct BandFlags
{
    std::string material;
    double pump1 = 0.0;
    double pump2 = 0.0;  // 0: same as pump1
    double phonon_ghz = 0.0;
    std::vector<int> axes{0, 1, 2};
    int strain = 2;
    std::string mode = "longitudinal";
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--db", c.db, "Material database file (JSON); overrides TRANSDUCE_DB");
    cmd->add_flag("--csv", c.csv, "Emit CSV");
    cmd->add_flag("--json", c.json, "Emit JSON");
}

void add_bands(CLI::App* cmd, BandFlags& b, bool with_material = true)
{
    if (with_material) {
        cmd->add_option("--material", b.material, "Material name")->required();
    }
    cmd->add_option("--pump1", b.pump1, "Pump 1 vacuum wavelength (m)")->required();
    cmd->add_option("--pump2", b.pump2, "Pump 2 vacuum wavelength (m); defaults to --pump1");
    cmd->add_option("--phonon-ghz", b.phonon_ghz, "Phonon frequency (GHz)")->required();
    cmd->add_option("--axes", b.axes, "Polarization axes of pump1 pump2 transduced (0..2)")
        ->expected(3)
        ->delimiter(',');
    cmd->add_option("--strain-component", b.strain, "Voigt index (0..5) of the acoustic strain");
    cmd->add_option("--mode", b.mode, "Acoustic mode label (key of v_sound_m_per_s)");
}

MaterialDb resolve_db(const Common& c, const Environment& env)
{
    if (!c.db.empty()) {
        return load_materials(c.db);
    }
    if (env.db_path && !env.db_path->empty()) {
        return load_materials(*env.db_path);
    }
    return default_materials();
}

MixingBands make_bands(const BandFlags& b)
{
    if (b.axes.size() != 3) {
        throw ArgumentError("--axes needs three values");
    }
    const double p2 = b.pump2 > 0.0 ? b.pump2 : b.pump1;
    return MixingBands::from_wavelengths(Length(b.pump1), Length(p2), b.phonon_ghz * 1e9,
                                         BandAxes{b.axes[0], b.axes[1], b.axes[2]}, b.mode, VoigtIndex(b.strain));
}

void emit(std::ostream& out, const Record& rec, OutputFormat f) { render(out, {rec}, f); }

Record chain_record(const Material& m, const MixingBands& bands, const MillerChain& c)
{
    static const char* band[] = {"p1", "p2", "t"};
    Record r;
    r.push_back({"material", m.name});
    const auto freqs = bands.optical_frequencies();
    for (int i = 0; i < 3; ++i) {
        r.push_back({std::string("lambda_") + band[i] + "_m", vacuum_wavelength(freqs[i]).value()});
    }
    r.push_back({"omega_m_rad_per_s", bands.omega_m().value()});
    for (int i = 0; i < 3; ++i) {
        r.push_back({std::string("n_") + band[i], c.n[i]});
    }
    for (int i = 0; i < 3; ++i) {
        r.push_back({std::string("eta1_rel_") + band[i], c.eta1_rel[i]});
    }
    for (int i = 0; i < 3; ++i) {
        r.push_back({std::string("p_") + band[i], c.p[i]});
    }
    r.push_back({"d_eff_m_per_V", c.d_eff.value()});
    r.push_back({"qpm_reduced", c.qpm_reduced});
    r.push_back({"eta2_V_m3_per_C2", c.eta2.value()});
    r.push_back({"miller_Q_V_m3_per_C2", c.miller_q.value()});
    r.push_back({"q_eff_m2_per_C", c.q_eff.value()});
    r.push_back({"abs_q_eff_m2_per_C", std::fabs(c.q_eff.value())});
    return r;
}

// ---------------------------------------------------------------------------

int cmd_materials(const Common& c, const std::string& name, const Environment& env, std::ostream& out)
{
    const MaterialDb db = resolve_db(c, env);
    std::vector<Record> records;
    for (const auto& m : db.materials()) {
        if (!name.empty() && m.name != name) {
            continue;
        }
        std::string modes;
        for (const auto& [mode, v] : m.v_sound_m_per_s) {
            modes += (modes.empty() ? "" : ";") + mode + "=" + format_number(v);
        }
        records.push_back({
            {"name", m.name},
            {"dispersion", std::string(m.dispersion.is_tabulated() ? "tabulated-points" : "sellmeier")},
            {"valid_lo_m", m.dispersion.valid_lo_m},
            {"valid_hi_m", m.dispersion.valid_hi_m},
            {"d_eff_m_per_V", m.d_eff_m_per_v},
            {"eps_r_x", m.eps_r[0]},
            {"eps_r_y", m.eps_r[1]},
            {"eps_r_z", m.eps_r[2]},
            {"v_sound_m_per_s", modes},
            {"damage_threshold_W_per_m2", m.damage_threshold_w_per_m2},
            {"qpm_order", static_cast<long long>(m.qpm_order)},
            {"photoelastic_note", m.photoelastic.note},
        });
    }
    if (!name.empty() && records.empty()) {
        throw DataError("unknown material '" + name + "'");
    }
    render(out, records, c.format());
    return kOk;
}

int cmd_estimate_q(const Common& c, const BandFlags& b, bool qpm, const Environment& env, std::ostream& out)
{
    const auto fmt = c.format();
    const MaterialDb db = resolve_db(c, env);
    const Material& m = db.at(b.material);
    const MixingBands bands = make_bands(b);
    const MillerChain chain = second_order_photoelasticity(m, bands, qpm);
    emit(out, chain_record(m, bands, chain), fmt);
    return kOk;
}

struct FieldFlags
{
    double power = 0.0;
    double mfd = 1.2e-6;
    double n_mode = 0.0;
    std::string material;
    double pump1 = 0.0;
    double pump2 = 0.0;
    double phonon_ghz = -1.0;
};

int cmd_field(const Common& c, const FieldFlags& f, const Environment& env, std::ostream& out)
{
    const auto fmt = c.format();
    std::optional<MaterialDb> db;
    const Material* m = nullptr;
    if (!f.material.empty()) {
        db = resolve_db(c, env);
        m = &db->at(f.material);
    }
    double n_mode = f.n_mode;
    if (n_mode == 0.0) {
        if (m == nullptr || f.pump1 <= 0.0) {
            throw ArgumentError("--n-mode is required unless --material and --pump1 are given");
        }
        n_mode = refractive_index(*m, Length(f.pump1), 0);
    }
    const PumpGeometry g(Power(f.power), Length(f.mfd), n_mode);
    const ElectricField e = peak_field_from_power(g);
    Record r{
        {"power_W", g.power.value()},
        {"mfd_m", g.mfd.value()},
        {"n_mode", g.n_mode},
        {"field_V_per_m", e.value()},
        {"intensity_W_per_m2", peak_intensity(g.power, g.mfd).value()},
    };
    if (m != nullptr) {
        r.push_back({"damage_threshold_W_per_m2", m->damage_threshold_w_per_m2});
        r.push_back({"damage_limited_power_W", damage_limited_power(*m, g.mfd).value()});
        r.push_back({"intensity_over_damage_threshold",
                     peak_intensity(g.power, g.mfd).value() / m->damage_threshold_w_per_m2});
        if (f.pump1 > 0.0 && f.phonon_ghz >= 0.0) {
            BandFlags b;
            b.pump1 = f.pump1;
            b.pump2 = f.pump2;
            b.phonon_ghz = f.phonon_ghz;
            const MixingBands bands = make_bands(b);
            const MillerChain chain = second_order_photoelasticity(*m, bands);
            const double eps_r = m->eps_r[bands.axes().pump1];
            r.push_back({"q_eff_m2_per_C", chain.q_eff.value()});
            r.push_back({"p_virt_per_V_per_m", std::fabs(virtual_photoelasticity(chain.q_eff, eps_r, ElectricField(1.0)))});
            r.push_back({"p_virt", std::fabs(virtual_photoelasticity(chain.q_eff, eps_r, e))});
        }
    }
    emit(out, r, fmt);
    return kOk;
}

struct SweepFlags
{
    double mfd = 1.2e-6;
    double n_mode = 0.0;
    double p_min = 1e-3;
    double p_max = 6.0;
    int steps = 11;
    bool log = false;
    std::string benchmark = "piezo";
    bool qpm = false;
};

int cmd_sweep_power(const Common& c, const BandFlags& b, const SweepFlags& s, const Environment& env,
                    std::ostream& out)
{
    const auto fmt = c.format();
    if (s.steps < 1) {
        throw ArgumentError("--steps must be at least 1");
    }
    if (!(s.p_min >= 0.0) || !(s.p_max >= s.p_min)) {
        throw ArgumentError("--p-min/--p-max must satisfy 0 <= p-min <= p-max");
    }
    if (s.log && !(s.p_min > 0.0)) {
        throw ArgumentError("--log needs --p-min > 0");
    }
    CouplingBenchmark bench;
    if (s.benchmark == "piezo") {
        bench = benchmark_piezo_optomechanical();
    } else if (s.benchmark == "high") {
        bench = benchmark_high_coupling();
    } else {
        throw ArgumentError("--benchmark must be 'piezo' or 'high'");
    }
    const MaterialDb db = resolve_db(c, env);
    const Material& m = db.at(b.material);
    const MixingBands bands = make_bands(b);
    const double n_mode =
        s.n_mode > 0.0 ? s.n_mode : refractive_index(m, vacuum_wavelength(bands.omega_p1()), bands.axes().pump1);

    std::vector<double> powers(static_cast<std::size_t>(s.steps));
    for (int i = 0; i < s.steps; ++i) {
        const double t = s.steps == 1 ? 0.0 : static_cast<double>(i) / (s.steps - 1);
        powers[i] = s.log ? s.p_min * std::pow(s.p_max / s.p_min, t) : s.p_min + t * (s.p_max - s.p_min);
    }
    const PowerSweep sweep = power_sweep(m, bands, Length(s.mfd), n_mode, powers, bench, s.qpm);

    switch (fmt) {
    case OutputFormat::csv:
        write_power_sweep_csv(out, sweep);
        break;
    case OutputFormat::json:
        out << to_json(sweep).dump(2) << '\n';
        break;
    case OutputFormat::table: {
        Record summary{
            {"material", sweep.material},
            {"q_eff_m2_per_C", sweep.chain.q_eff.value()},
            {"eps_r", sweep.eps_r},
            {"p_nominal", sweep.p_nominal},
            {"mfd_m", sweep.mfd.value()},
            {"n_mode", sweep.n_mode},
            {"damage_limited_power_W", sweep.damage_limit.value()},
            {"benchmark", sweep.benchmark.label},
            {"note", std::string("g_scaled is an extrapolation: coupling taken proportional to p_virt/p_nominal")},
        };
        render(out, {summary}, OutputFormat::table);
        out << '\n';
        std::ostringstream csv;
        write_power_sweep_csv(csv, sweep);
        std::istringstream lines(csv.str());
        std::string line;
        while (std::getline(lines, line)) {
            std::istringstream cells(line);
            std::string cell;
            while (std::getline(cells, cell, ',')) {
                out << std::left << std::setw(26) << cell;
            }
            out << '\n';
        }
        break;
    }
    }
    return kOk;
}

struct PhaseFlags
{
    double length = 0.0;
    double period = 0.0;
    int sign = 1;
    std::string sweep = "none";
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;
};

int cmd_phasematch(const Common& c, const BandFlags& b, const PhaseFlags& p, const Environment& env,
                   std::ostream& out)
{
    const auto fmt = c.format();
    const MaterialDb db = resolve_db(c, env);
    const Material& m = db.at(b.material);
    std::optional<PolingGrating> grating;
    if (p.period > 0.0) {
        grating = PolingGrating{Length(p.period), p.sign};
    } else if (p.period < 0.0) {
        throw ArgumentError("--period must be positive");
    }
    const PhaseMatchInput in(make_bands(b), m, Length(p.length), grating);

    if (p.sweep == "none") {
        const PhaseMatchResult r = delta_k(in);
        if (fmt == OutputFormat::json) {
            out << to_json(r).dump(2) << '\n';
            return kOk;
        }
        Record rec{
            {"k_t_rad_per_m", r.k_t.value()},
            {"k_p1_rad_per_m", r.k_p1.value()},
            {"k_p2_rad_per_m", r.k_p2.value()},
            {"k_m_rad_per_m", r.k_m.value()},
            {"k_poling_rad_per_m", r.k_poling.value()},
            {"delta_k_rad_per_m", r.delta_k.value()},
            {"lambda_qpm_m", r.lambda_qpm ? r.lambda_qpm->value() : 0.0},
            {"length_m", in.length.value()},
            {"efficiency", r.efficiency},
        };
        emit(out, rec, fmt);
        return kOk;
    }

    std::vector<SweepPoint> points;
    std::string column;
    if (p.sweep == "pump-wavelength") {
        points = sweep_pump_wavelength(in, p.from, p.to, p.step);
        column = "pump_wavelength_m";
    } else if (p.sweep == "period") {
        points = sweep_poling_period(in, p.from, p.to, p.step);
        column = "poling_period_m";
    } else {
        throw ArgumentError("--sweep must be none, pump-wavelength or period");
    }
    std::vector<Record> records;
    for (const auto& pt : points) {
        records.push_back({{column, pt.variable}, {"delta_k_rad_per_m", pt.delta_k.value()}, {"efficiency", pt.efficiency}});
    }
    if (fmt == OutputFormat::csv) {
        write_sweep_csv(out, points, column);
    } else {
        render(out, records, fmt == OutputFormat::table ? OutputFormat::csv : fmt);
    }
    return kOk;
}

int cmd_poling(const Common& c, const BandFlags& b, double length, const Environment& env, std::ostream& out)
{
    const auto fmt = c.format();
    const MaterialDb db = resolve_db(c, env);
    const Material& m = db.at(b.material);
    PhaseMatchInput in(make_bands(b), m, Length(length));
    const PhaseMatchResult unpoled = delta_k(in);
    const auto grating = poling_period(in);
    Record rec{
        {"unpoled_delta_k_rad_per_m", unpoled.delta_k.value()},
        {"poling_needed", grating.has_value()},
        {"lambda_qpm_m", grating ? grating->period.value() : 0.0},
        {"poling_sign", static_cast<long long>(grating ? grating->sign : 0)},
    };
    in.poling = grating;
    const PhaseMatchResult poled = delta_k(in);
    rec.push_back({"poled_delta_k_rad_per_m", poled.delta_k.value()});
    rec.push_back({"efficiency", poled.efficiency});
    rec.push_back({"length_m", in.length.value()});
    for (auto [choice, label] : {std::pair{PumpChoice::pump1, "p1"}, std::pair{PumpChoice::pump2, "p2"}}) {
        const ThreeWaveResidual r3 = three_wave_residual(in, choice);
        rec.push_back({std::string("delta_k_3wm_") + label + "_rad_per_m", r3.delta_k_3wm.value()});
        rec.push_back({std::string("suppression_3wm_") + label, r3.suppression});
        rec.push_back({std::string("degenerate_3wm_") + label, r3.degenerate});
    }
    emit(out, rec, fmt);
    return kOk;
}

struct ThermoFlags
{
    int count = 1000;
    unsigned long long seed = 1;
    double tol = 1e-6;
    double range = 10.0;
    std::vector<double> model;
};

int cmd_verify_thermo(const Common& c, const ThermoFlags& t, std::ostream& out)
{
    using namespace thermo;
    const auto fmt = c.format();
    if (t.count < 0) {
        throw ArgumentError("--count must be non-negative");
    }
    if (!(t.tol > 0.0)) {
        throw ArgumentError("--tol must be positive");
    }
    std::vector<FreeEnergyModel> models;
    if (!t.model.empty()) {
        if (t.model.size() != 6) {
            throw ArgumentError("--model needs six values: c,h,eta1,eta2,p,q");
        }
        models.push_back({t.model[0], t.model[1], t.model[2], t.model[3], t.model[4], t.model[5]});
    } else {
        std::mt19937_64 rng(t.seed);
        std::uniform_real_distribution<double> coef(-t.range, t.range);
        for (int i = 0; i < t.count; ++i) {
            models.push_back({coef(rng), coef(rng), coef(rng), coef(rng), coef(rng), coef(rng)});
        }
    }

    RelationReport worst;
    bool all_passed = true;
    for (const auto& m : models) {
        const RelationReport r = verify_relations(m, t.tol);
        worst.order1_residual = std::max(worst.order1_residual, r.order1_residual);
        worst.order2_residual = std::max(worst.order2_residual, r.order2_residual);
        worst.order3_residual = std::max(worst.order3_residual, r.order3_residual);
        worst.factor2_residual = std::max(worst.factor2_residual, r.factor2_residual);
        worst.fd_step_used = r.fd_step_used;
        all_passed = all_passed && r.passed();
    }

    // Stress and field taken from two different potentials: the checker must
    // reject the first-order relation.
    const FreeEnergyModel a{2.0, 3.0, 1.5, 0.5, 0.2, 0.02};
    FreeEnergyModel b = a;
    b.h = -4.0;
    const ConstitutiveLaw broken{constitutive_law(a).stress, constitutive_law(b).efield};
    const RelationReport adversarial = verify_relations(broken, t.tol);
    const bool detected = !adversarial.order1_passed;

    auto status = [&](double res) { return std::string(res < t.tol ? "PASS" : "FAIL"); };
    std::vector<Record> rows{
        {{"relation", std::string("order1 dX/dD = dE/dx")}, {"worst_residual", worst.order1_residual}, {"tolerance", t.tol}, {"status", status(worst.order1_residual)}},
        {{"relation", std::string("order2 d2X/dD2 = d2E/dxdD")}, {"worst_residual", worst.order2_residual}, {"tolerance", t.tol}, {"status", status(worst.order2_residual)}},
        {{"relation", std::string("order3 d3X/dD3 = d3E/dxdD2")}, {"worst_residual", worst.order3_residual}, {"tolerance", t.tol}, {"status", status(worst.order3_residual)}},
        {{"relation", std::string("factor2 d3X/dD3 = 2 deta2/dx")}, {"worst_residual", worst.factor2_residual}, {"tolerance", t.tol}, {"status", status(worst.factor2_residual)}},
        {{"relation", std::string("non-conservative fixture rejected")}, {"worst_residual", adversarial.order1_residual}, {"tolerance", t.tol}, {"status", std::string(detected ? "PASS" : "FAIL")}},
    };
    if (fmt == OutputFormat::table) {
        out << "models checked: " << models.size() << ", fd step base: " << format_number(worst.fd_step_used) << '\n';
        out << std::left << std::setw(38) << "relation" << std::setw(26) << "worst_residual" << std::setw(12) << "tolerance"
            << "status\n";
        for (const auto& r : rows) {
            out << std::left << std::setw(38) << std::get<std::string>(r[0].value) << std::setw(26)
                << format_number(std::get<double>(r[1].value)) << std::setw(12) << format_number(t.tol)
                << std::get<std::string>(r[3].value) << '\n';
        }
    } else {
        render(out, rows, fmt);
    }
    return all_passed && detected ? kOk : kDataError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env)
{
    CLI::App app{"transduce: optomechanical four-wave-mixing design toolkit"};
    app.name("transduce");
    app.require_subcommand(1);

    std::function<int()> action;
    Common common;
    BandFlags bands;

    std::string mat_name;
    auto* materials = app.add_subcommand("materials", "List or inspect the material database");
    add_common(materials, common);
    materials->add_option("--name", mat_name, "Show only this material");
    materials->callback([&] { action = [&] { return cmd_materials(common, mat_name, env, out); }; });

    bool qpm = false;
    auto* estimate = app.add_subcommand("estimate-q", "Second-order photoelasticity via Miller's rule");
    add_common(estimate, common);
    add_bands(estimate, bands);
    estimate->add_flag("--qpm", qpm, "Apply the quasi-phase-matching reduction to d_eff");
    estimate->callback([&] { action = [&] { return cmd_estimate_q(common, bands, qpm, env, out); }; });

    FieldFlags field_flags;
    auto* field = app.add_subcommand("field", "Peak field, intensity and damage margin for a pump");
    add_common(field, common);
    field->add_option("--power", field_flags.power, "Pump power (W)")->required();
    field->add_option("--mfd", field_flags.mfd, "Mode-field diameter (m)");
    field->add_option("--n-mode", field_flags.n_mode, "Modal index; default n of --material at --pump1");
    field->add_option("--material", field_flags.material, "Material name");
    field->add_option("--pump1", field_flags.pump1, "Pump 1 vacuum wavelength (m)");
    field->add_option("--pump2", field_flags.pump2, "Pump 2 vacuum wavelength (m)");
    field->add_option("--phonon-ghz", field_flags.phonon_ghz, "Phonon frequency (GHz); enables p_virt output");
    field->callback([&] { action = [&] { return cmd_field(common, field_flags, env, out); }; });

    SweepFlags sweep_flags;
    auto* sweep = app.add_subcommand("sweep-power", "Virtual photoelasticity over a pump-power grid");
    add_common(sweep, common);
    add_bands(sweep, bands);
    sweep->add_option("--mfd", sweep_flags.mfd, "Mode-field diameter (m)");
    sweep->add_option("--n-mode", sweep_flags.n_mode, "Modal index; default n at pump1");
    sweep->add_option("--p-min", sweep_flags.p_min, "Lowest power (W)");
    sweep->add_option("--p-max", sweep_flags.p_max, "Highest power (W)");
    sweep->add_option("--steps", sweep_flags.steps, "Number of grid points");
    sweep->add_flag("--log", sweep_flags.log, "Logarithmic grid");
    sweep->add_option("--benchmark", sweep_flags.benchmark, "Coupling benchmark: piezo or high");
    sweep->add_flag("--qpm", sweep_flags.qpm, "Apply the quasi-phase-matching reduction to d_eff");
    sweep->callback([&] { action = [&] { return cmd_sweep_power(common, bands, sweep_flags, env, out); }; });

    PhaseFlags phase_flags;
    auto* phase = app.add_subcommand("phasematch", "Phase mismatch and efficiency, optionally swept");
    add_common(phase, common);
    add_bands(phase, bands);
    phase->add_option("--length", phase_flags.length, "Interaction length (m)")->required();
    phase->add_option("--period", phase_flags.period, "Poling period (m)");
    phase->add_option("--poling-sign", phase_flags.sign, "Grating sign, +1 or -1");
    phase->add_option("--sweep", phase_flags.sweep, "none, pump-wavelength or period");
    phase->add_option("--from", phase_flags.from, "Sweep start (m)");
    phase->add_option("--to", phase_flags.to, "Sweep end (m)");
    phase->add_option("--step", phase_flags.step, "Sweep step (m)");
    phase->callback([&] { action = [&] { return cmd_phasematch(common, bands, phase_flags, env, out); }; });

    double poling_length = 0.0;
    auto* poling = app.add_subcommand("poling", "Solve the QPM period and check three-wave suppression");
    add_common(poling, common);
    add_bands(poling, bands);
    poling->add_option("--length", poling_length, "Interaction length (m)")->required();
    poling->callback([&] { action = [&] { return cmd_poling(common, bands, poling_length, env, out); }; });

    ThermoFlags thermo_flags;
    auto* verify = app.add_subcommand("verify-thermo", "Certify the free-energy Maxwell relations numerically");
    add_common(verify, common);
    verify->add_option("--count", thermo_flags.count, "Number of random models");
    verify->add_option("--seed", thermo_flags.seed, "Random seed");
    verify->add_option("--tol", thermo_flags.tol, "Relative residual tolerance");
    verify->add_option("--range", thermo_flags.range, "Coefficients drawn uniformly from [-range, range]");
    verify->add_option("--model", thermo_flags.model, "Single model c,h,eta1,eta2,p,q")->delimiter(',');
    verify->callback([&] { action = [&] { return cmd_verify_thermo(common, thermo_flags, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        return action();
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
}

}  // namespace transduce::cli
