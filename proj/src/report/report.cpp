#include "transduce/report.hpp"

#include <charconv>
#include <cmath>

namespace transduce {

using json = nlohmann::ordered_json;

std::string format_number(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

void write_power_sweep_csv(std::ostream& os, const PowerSweep& sweep)
{
    os << "power_W,field_V_per_m,intensity_W_per_m2,p_virt,p_virt_over_p_nominal,"
          "intensity_over_damage_threshold,g_scaled_extrapolated_rad_per_s\n";
    for (const auto& r : sweep.rows) {
        os << format_number(r.power.value()) << ',' << format_number(r.field.value()) << ','
           << format_number(r.intensity.value()) << ',' << format_number(r.p_virt) << ','
           << format_number(r.p_virt_over_nominal) << ',' << format_number(r.damage_fraction) << ','
           << format_number(r.g_scaled.value()) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, std::span<const SweepPoint> points, const std::string& variable_column)
{
    os << variable_column << ",delta_k_rad_per_m,efficiency\n";
    for (const auto& p : points) {
        os << format_number(p.variable) << ',' << format_number(p.delta_k.value()) << ','
           << format_number(p.efficiency) << '\n';
    }
}

json to_json(const MillerChain& c)
{
    return json{
        {"n", c.n},
        {"eta1_rel", c.eta1_rel},
        {"p", c.p},
        {"d_eff_m_per_v", c.d_eff.value()},
        {"qpm_reduced", c.qpm_reduced},
        {"eta2_V_m3_per_C2", c.eta2.value()},
        {"miller_Q_V_m3_per_C2", c.miller_q.value()},
        {"q_eff_m2_per_C", c.q_eff.value()},
    };
}

json to_json(const PowerSweep& s)
{
    json rows = json::array();
    for (const auto& r : s.rows) {
        rows.push_back({
            {"power_W", r.power.value()},
            {"field_V_per_m", r.field.value()},
            {"intensity_W_per_m2", r.intensity.value()},
            {"p_virt", r.p_virt},
            {"p_virt_over_p_nominal", r.p_virt_over_nominal},
            {"intensity_over_damage_threshold", r.damage_fraction},
            {"g_scaled_extrapolated_rad_per_s", r.g_scaled.value()},
        });
    }
    return json{
        {"material", s.material},
        {"miller_chain", to_json(s.chain)},
        {"eps_r", s.eps_r},
        {"p_nominal", s.p_nominal},
        {"mfd_m", s.mfd.value()},
        {"n_mode", s.n_mode},
        {"damage_limited_power_W", s.damage_limit.value()},
        {"benchmark", {{"label", s.benchmark.label}, {"g0_rad_per_s", s.benchmark.g0_ref.value()}}},
        {"caveats",
         {"photoelastic entries are used unchanged across bands",
          "g_scaled assumes coupling proportional to effective photoelasticity with all else fixed; extrapolation"}},
        {"rows", std::move(rows)},
    };
}

json to_json(const PhaseMatchResult& r)
{
    json j{
        {"k_t_rad_per_m", r.k_t.value()},
        {"k_p1_rad_per_m", r.k_p1.value()},
        {"k_p2_rad_per_m", r.k_p2.value()},
        {"k_m_rad_per_m", r.k_m.value()},
        {"k_poling_rad_per_m", r.k_poling.value()},
        {"delta_k_rad_per_m", r.delta_k.value()},
        {"lambda_qpm_m", nullptr},
        {"efficiency", r.efficiency},
    };
    if (r.lambda_qpm) {
        j["lambda_qpm_m"] = r.lambda_qpm->value();
    }
    return j;
}

json to_json(const ThreeWaveResidual& r)
{
    return json{
        {"omega_t3_rad_per_s", r.omega_t3.value()},
        {"delta_k_3wm_rad_per_m", r.delta_k_3wm.value()},
        {"suppression", r.suppression},
        {"degenerate", r.degenerate},
    };
}

json to_json(const thermo::RelationReport& r)
{
    return json{
        {"order1_residual", r.order1_residual},
        {"order2_residual", r.order2_residual},
        {"order3_residual", r.order3_residual},
        {"factor2_residual", r.factor2_residual},
        {"fd_step_used", r.fd_step_used},
        {"tolerance", r.tolerance},
        {"passed",
         {{"order1", r.order1_passed},
          {"order2", r.order2_passed},
          {"order3", r.order3_passed},
          {"factor2", r.factor2_passed}}},
    };
}

json to_json(const thermo::TensorRelationReport& r)
{
    json j = to_json(r.relations);
    j["kleinman_residual"] = r.kleinman_residual ? json(*r.kleinman_residual) : json(nullptr);
    j["kleinman_passed"] = r.kleinman_passed;
    return j;
}

}  // namespace transduce
