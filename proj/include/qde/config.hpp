#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qde/charge_stability.hpp"
#include "qde/coulomb_coupling.hpp"
#include "qde/effective_model.hpp"
#include "qde/lindblad.hpp"

namespace qde {

// Run configuration, INI-style sections with key = value entries. Frequencies
// carry explicit unit suffixes (2pi_ghz / 2pi_mhz). Defaults reproduce the
// reference operating point. Unknown sections or keys are rejected.
struct RunConfig {
    // [qubit]
    double delta_2pi_ghz = 30.0;
    double t_c_2pi_ghz = 14.0;

    // [mediator]
    double lambda_nm = 200.0;
    double j_c_2pi_ghz = 5.0;
    std::optional<double> omega_s_2pi_ghz;  // solved from r when absent

    // [drive]
    double field_v_per_m = 2.0;
    bool resonant = true;
    int r = -100;
    double phi_rad = 0.0;

    // [geometry]
    double a_nm = 500.0;
    double sigma_nm = 20.0;
    double relative_permittivity = 11.7;

    // [noise]
    double gamma_2pi_mhz = 0.25;
    double gamma_m_2pi_mhz = 0.37;
    double t2_star_us = 3.5;

    // [stability]
    RxStabilityParams stab_rx;
    CenterStabilityParams stab_center;
    GridSpec stab_rx_grid{-1.5, 1.5, 401, -0.5, 1.5, 401};
    GridSpec stab_center_grid{-1.5, 1.5, 401, -2.0, 0.5, 401};
    double stab_v_m = 0.22;   // operation point, units of U
    double stab_v_mc = -0.98;

    // [spectrum]
    double spectrum_min = 0.0;
    double spectrum_max = 5.0;
    int spectrum_points = 501;

    // [sweep]
    double sweep_lambda_min_nm = 50.0;
    double sweep_lambda_max_nm = 300.0;
    double sweep_lambda_step_nm = 10.0;
    std::vector<double> sweep_a_values_nm{400.0, 500.0, 600.0, 800.0};

    // [fidelity_map]
    double map_gamma_max_2pi_mhz = 1.0;
    double map_gamma_m_max_2pi_mhz = 2.0;
    int map_points = 21;

    // [leakage]
    double leakage_t_max_over_tg = 9.0;
    double leakage_phase_step = 0.6;
    int leakage_samples = 1200;

    // [output]
    std::string out_dir = "out";
    std::string format = "csv";

    // derived helpers (rad/ns unless noted)
    RxParams rx_params() const;
    GeometryParams geometry() const;
    NoiseParams noise() const;
    double omega_M() const;

    struct Derived {
        RxEigenmodel model_a, model_b;
        CouplingStrengths cpl;
        double omega_s;
        DriveParams drive;
        EffectiveSystemParams esp;
    };
    Derived derive() const;  // solves omega_s from r unless pinned
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

// canonical key = value rendering of every field, used for hashing
std::string canonical_config_text(const RunConfig& c);

}  // namespace qde
