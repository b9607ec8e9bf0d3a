#include "qde/config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "qde/units.hpp"

namespace qde {

RxParams RunConfig::rx_params() const {
    RxParams p;
    p.delta = units::from_2pi_GHz(delta_2pi_ghz);
    p.t_c = units::from_2pi_GHz(t_c_2pi_ghz);
    p.epsilon = 0.0;
    return p;
}

GeometryParams RunConfig::geometry() const {
    return {lambda_nm, a_nm, sigma_nm, relative_permittivity};
}

NoiseParams RunConfig::noise() const {
    return {units::from_2pi_MHz(gamma_2pi_mhz), units::from_2pi_MHz(gamma_2pi_mhz),
            units::from_2pi_MHz(gamma_m_2pi_mhz)};
}

double RunConfig::omega_M() const { return rabi_frequency(lambda_nm, field_v_per_m); }

RunConfig::Derived RunConfig::derive() const {
    Derived d;
    d.model_a = solve_symmetric(rx_params());
    d.model_b = d.model_a;  // identical qubits
    d.cpl = multipole_strengths(geometry());
    d.omega_s = omega_s_2pi_ghz ? units::from_2pi_GHz(*omega_s_2pi_ghz)
                                : solve_omega_s_for_r(d.model_a, d.model_b, d.cpl, omega_M(), r);
    const double omega_s_pr = d.omega_s + (d.model_a.q0 + d.model_b.q0) * d.cpl.DeltaK;
    d.drive = DriveParams(lambda_nm, field_v_per_m, omega_s_pr, phi_rad);
    d.esp = shifted_frequencies(d.model_a, d.model_b, d.omega_s, d.drive, d.cpl);
    return d;
}

namespace {

struct RawConfig {
    std::map<std::string, std::map<std::string, std::string>> sections;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

RawConfig parse_ini(const std::string& text) {
    RawConfig raw;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            raw.sections[section];
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": key outside any section");
        if (!raw.sections[section].insert({key, value}).second)
            throw ConfigError("config: duplicate key '" + key + "' in [" + section + "]");
    }
    return raw;
}

double to_double(const std::string& section, const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: [" + section + "] " + key + " = '" + v + "' is not a number");
    }
}

int to_int(const std::string& section, const std::string& key, const std::string& v) {
    const double x = to_double(section, key, v);
    const int i = static_cast<int>(x);
    if (static_cast<double>(i) != x)
        throw ConfigError("config: [" + section + "] " + key + " must be an integer");
    return i;
}

bool to_bool(const std::string& section, const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config: [" + section + "] " + key + " must be a boolean");
}

std::vector<double> to_list(const std::string& section, const std::string& key,
                            const std::string& v) {
    std::vector<double> out;
    std::istringstream in(v);
    std::string tok;
    while (in >> tok) out.push_back(to_double(section, key, tok));
    if (out.empty()) throw ConfigError("config: [" + section + "] " + key + " is empty");
    return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    const RawConfig raw = parse_ini(text);
    RunConfig c;

    for (const auto& [section, kv] : raw.sections) {
        for (const auto& [key, value] : kv) {
            auto num = [&] { return to_double(section, key, value); };
            auto integer = [&] { return to_int(section, key, value); };
            bool known = true;
            if (section == "qubit") {
                if (key == "delta_2pi_ghz") c.delta_2pi_ghz = num();
                else if (key == "t_c_2pi_ghz") c.t_c_2pi_ghz = num();
                else known = false;
            } else if (section == "mediator") {
                if (key == "lambda_nm") c.lambda_nm = num();
                else if (key == "j_c_2pi_ghz") c.j_c_2pi_ghz = num();
                else if (key == "omega_s_2pi_ghz") c.omega_s_2pi_ghz = num();
                else known = false;
            } else if (section == "drive") {
                if (key == "field_v_per_m") c.field_v_per_m = num();
                else if (key == "resonant") c.resonant = to_bool(section, key, value);
                else if (key == "r") c.r = integer();
                else if (key == "phi_rad") c.phi_rad = num();
                else known = false;
            } else if (section == "geometry") {
                if (key == "a_nm") c.a_nm = num();
                else if (key == "sigma_nm") c.sigma_nm = num();
                else if (key == "relative_permittivity") c.relative_permittivity = num();
                else known = false;
            } else if (section == "noise") {
                if (key == "gamma_2pi_mhz") c.gamma_2pi_mhz = num();
                else if (key == "gamma_m_2pi_mhz") c.gamma_m_2pi_mhz = num();
                else if (key == "t2_star_us") c.t2_star_us = num();
                else known = false;
            } else if (section == "stability") {
                if (key == "v_over_u") c.stab_rx.v = num();
                else if (key == "eps2_over_u") c.stab_rx.eps2 = num();
                else if (key == "u_c_over_u") c.stab_center.u_c = num();
                else if (key == "v_c_over_u") c.stab_center.v_c = num();
                else if (key == "eps_m_over_u") c.stab_center.eps_m = num();
                else if (key == "v_m_over_u") c.stab_v_m = num();
                else if (key == "v_mc_over_u") c.stab_v_mc = num();
                else if (key == "nx") c.stab_rx_grid.nx = c.stab_center_grid.nx = integer();
                else if (key == "ny") c.stab_rx_grid.ny = c.stab_center_grid.ny = integer();
                else if (key == "rx_eps_min") c.stab_rx_grid.x_min = num();
                else if (key == "rx_eps_max") c.stab_rx_grid.x_max = num();
                else if (key == "rx_v_m_min") c.stab_rx_grid.y_min = num();
                else if (key == "rx_v_m_max") c.stab_rx_grid.y_max = num();
                else if (key == "center_eps_min") c.stab_center_grid.x_min = num();
                else if (key == "center_eps_max") c.stab_center_grid.x_max = num();
                else if (key == "center_v_mc_min") c.stab_center_grid.y_min = num();
                else if (key == "center_v_mc_max") c.stab_center_grid.y_max = num();
                else known = false;
            } else if (section == "spectrum") {
                if (key == "delta_over_tc_min") c.spectrum_min = num();
                else if (key == "delta_over_tc_max") c.spectrum_max = num();
                else if (key == "points") c.spectrum_points = integer();
                else known = false;
            } else if (section == "sweep") {
                if (key == "lambda_min_nm") c.sweep_lambda_min_nm = num();
                else if (key == "lambda_max_nm") c.sweep_lambda_max_nm = num();
                else if (key == "lambda_step_nm") c.sweep_lambda_step_nm = num();
                else if (key == "a_values_nm") c.sweep_a_values_nm = to_list(section, key, value);
                else known = false;
            } else if (section == "fidelity_map") {
                if (key == "gamma_max_2pi_mhz") c.map_gamma_max_2pi_mhz = num();
                else if (key == "gamma_m_max_2pi_mhz") c.map_gamma_m_max_2pi_mhz = num();
                else if (key == "points") c.map_points = integer();
                else known = false;
            } else if (section == "leakage") {
                if (key == "t_max_over_tg") c.leakage_t_max_over_tg = num();
                else if (key == "phase_step") c.leakage_phase_step = num();
                else if (key == "samples") c.leakage_samples = integer();
                else known = false;
            } else if (section == "output") {
                if (key == "dir") c.out_dir = value;
                else if (key == "format") c.format = value;
                else known = false;
            } else {
                throw ConfigError("config: unknown section [" + section + "]");
            }
            if (!known)
                throw ConfigError("config: unknown key '" + key + "' in [" + section + "]");
        }
    }

    if (c.delta_2pi_ghz <= 0.0) throw ConfigError("config: qubit delta must be positive");
    if (c.t_c_2pi_ghz < 0.0) throw ConfigError("config: qubit t_c must be non-negative");
    if (c.lambda_nm <= 0.0 || c.a_nm <= 0.0) throw ConfigError("config: geometry must be positive");
    if (c.gamma_2pi_mhz < 0.0 || c.gamma_m_2pi_mhz < 0.0)
        throw ConfigError("config: dephasing rates must be non-negative");
    if (c.format != "csv" && c.format != "json")
        throw ConfigError("config: output format must be csv or json");
    if (c.map_points < 2) throw ConfigError("config: fidelity_map points must be >= 2");
    if (c.spectrum_points < 1 || c.stab_rx_grid.nx < 1 || c.stab_rx_grid.ny < 1)
        throw ConfigError("config: grids must be non-empty");
    return c;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string canonical_config_text(const RunConfig& c) {
    std::ostringstream out;
    out.precision(17);
    out << "[qubit]\n"
        << "delta_2pi_ghz = " << c.delta_2pi_ghz << "\n"
        << "t_c_2pi_ghz = " << c.t_c_2pi_ghz << "\n"
        << "[mediator]\n"
        << "lambda_nm = " << c.lambda_nm << "\n"
        << "j_c_2pi_ghz = " << c.j_c_2pi_ghz << "\n";
    if (c.omega_s_2pi_ghz) out << "omega_s_2pi_ghz = " << *c.omega_s_2pi_ghz << "\n";
    out << "[drive]\n"
        << "field_v_per_m = " << c.field_v_per_m << "\n"
        << "resonant = " << (c.resonant ? "true" : "false") << "\n"
        << "r = " << c.r << "\n"
        << "phi_rad = " << c.phi_rad << "\n"
        << "[geometry]\n"
        << "a_nm = " << c.a_nm << "\n"
        << "sigma_nm = " << c.sigma_nm << "\n"
        << "relative_permittivity = " << c.relative_permittivity << "\n"
        << "[noise]\n"
        << "gamma_2pi_mhz = " << c.gamma_2pi_mhz << "\n"
        << "gamma_m_2pi_mhz = " << c.gamma_m_2pi_mhz << "\n"
        << "t2_star_us = " << c.t2_star_us << "\n"
        << "[stability]\n"
        << "v_over_u = " << c.stab_rx.v << "\n"
        << "eps2_over_u = " << c.stab_rx.eps2 << "\n"
        << "u_c_over_u = " << c.stab_center.u_c << "\n"
        << "v_c_over_u = " << c.stab_center.v_c << "\n"
        << "eps_m_over_u = " << c.stab_center.eps_m << "\n"
        << "v_m_over_u = " << c.stab_v_m << "\n"
        << "v_mc_over_u = " << c.stab_v_mc << "\n"
        << "nx = " << c.stab_rx_grid.nx << "\n"
        << "ny = " << c.stab_rx_grid.ny << "\n"
        << "[spectrum]\n"
        << "delta_over_tc_min = " << c.spectrum_min << "\n"
        << "delta_over_tc_max = " << c.spectrum_max << "\n"
        << "points = " << c.spectrum_points << "\n"
        << "[sweep]\n"
        << "lambda_min_nm = " << c.sweep_lambda_min_nm << "\n"
        << "lambda_max_nm = " << c.sweep_lambda_max_nm << "\n"
        << "lambda_step_nm = " << c.sweep_lambda_step_nm << "\n"
        << "a_values_nm =";
    for (double a : c.sweep_a_values_nm) out << " " << a;
    out << "\n"
        << "[fidelity_map]\n"
        << "gamma_max_2pi_mhz = " << c.map_gamma_max_2pi_mhz << "\n"
        << "gamma_m_max_2pi_mhz = " << c.map_gamma_m_max_2pi_mhz << "\n"
        << "points = " << c.map_points << "\n"
        << "[leakage]\n"
        << "t_max_over_tg = " << c.leakage_t_max_over_tg << "\n"
        << "phase_step = " << c.leakage_phase_step << "\n"
        << "samples = " << c.leakage_samples << "\n"
        << "[output]\n"
        << "dir = " << c.out_dir << "\n"
        << "format = " << c.format << "\n";
    return out.str();
}

}  // namespace qde
