#pragma once

#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "transduce/phasematch.hpp"
#include "transduce/photoelastic.hpp"
#include "transduce/thermo.hpp"

namespace transduce {

// Shortest decimal text that parses back to exactly `v`.
std::string format_number(double v);

// CSV with a header row; column names carry SI units.
void write_power_sweep_csv(std::ostream& os, const PowerSweep& sweep);
void write_sweep_csv(std::ostream& os, std::span<const SweepPoint> points, const std::string& variable_column);

nlohmann::ordered_json to_json(const MillerChain& chain);
nlohmann::ordered_json to_json(const PowerSweep& sweep);
nlohmann::ordered_json to_json(const PhaseMatchResult& result);
nlohmann::ordered_json to_json(const ThreeWaveResidual& residual);
nlohmann::ordered_json to_json(const thermo::RelationReport& report);
nlohmann::ordered_json to_json(const thermo::TensorRelationReport& report);

}  // namespace transduce
