#pragma once

#include <string>

#include "wva/amplification.hpp"
#include "wva/config.hpp"
#include "wva/estimation.hpp"

namespace wva {

/// JSON text for a single-point simulation: the measurement bundle plus
/// weak-limit comparison and regime flags. Key order and float formatting
/// are deterministic, so equal inputs give byte-equal reports.
std::string simulation_report_json(const RunConfig& config);

/// JSON text for a Monte Carlo estimation study.
std::string estimation_report_json(const RunConfig& config,
                                   const EstimationReport& report);

}  // namespace wva
