#pragma once

#include <string>
#include <vector>

#include "semiostat/scenario.hpp"

namespace semiostat::dsl {

/// Rendered outcome of one scenario execution. The text is deterministic:
/// identical scenarios produce byte-identical reports.
struct RunReport {
    std::string scenario_name;
    std::string text;
    std::vector<std::string> artifacts;  // file names relative to the out dir
    bool success = true;                 // false when any run aborted or a law failed
};

/// Executes the scenario's run directives in order, writing CSV artifacts
/// into `out_dir` (created if missing). Uncertified quotient systems abort
/// their run with the compatibility counterexample recorded in the report.
RunReport run_scenario(const Scenario& s, const std::string& out_dir);

/// Law checks only (the `check` subcommand): category laws of the context
/// poset, presheaf antitonicity, and per-filter compatibility certificates.
RunReport check_scenario(const Scenario& s);

}  // namespace semiostat::dsl
