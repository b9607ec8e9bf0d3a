#pragma once

#include <string>
#include <vector>

#include "qde/config.hpp"
#include "qde/outputs.hpp"
#include "qde/vendor_json.hpp"

namespace qde::cli {

inline constexpr const char* kVersion = "0.1.0";

struct CmdResult {
    std::vector<std::string> files;
    nlohmann::json summary;
};

CmdResult cmd_spectrum(const RunConfig& c, RunManifest& m);
CmdResult cmd_stability(const RunConfig& c, RunManifest& m, int workers);
CmdResult cmd_dipole(const RunConfig& c, RunManifest& m);
CmdResult cmd_coupling(const RunConfig& c, RunManifest& m, int workers);
CmdResult cmd_gate(const RunConfig& c, RunManifest& m);
CmdResult cmd_fidelity_map(const RunConfig& c, RunManifest& m, int workers);
CmdResult cmd_leakage(const RunConfig& c, RunManifest& m);

struct ValidateCheck {
    std::string name;
    double measured;
    double expected;
    double tol;  // absolute tolerance on `measured`
    bool pass;
};

struct ValidateReport {
    std::vector<ValidateCheck> checks;
    bool all_pass = false;
    nlohmann::json summary;
};

// Runs every quoted-value cross-check at the configured parameters and emits
// validate.json plus the run summary {K_ab, t_g, F_at_paper_point, C,
// max_leakage}.
ValidateReport cmd_validate(const RunConfig& c, RunManifest& m);

// shared table writer honoring the configured output format
std::string write_table(RunManifest& m, const RunConfig& c, const std::string& stem,
                        const std::vector<std::string>& columns,
                        const std::vector<std::vector<double>>& rows,
                        const std::vector<std::pair<std::string, std::string>>& meta);

}  // namespace qde::cli
