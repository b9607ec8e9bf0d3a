#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "qde/cli.hpp"
#include "qde/sweep.hpp"

namespace {

// exit codes: 0 ok, 2 config error, 3 validity violation, 4 acceptance-check failure
constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitValidity = 3;
constexpr int kExitAcceptance = 4;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"driven dot-mediated entangling gate simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, format;
    int workers = qde::default_workers();
    app.add_option("--config", config_path, "run configuration file (INI sections)");
    app.add_option("--out", out_dir, "output directory (overrides config)");
    app.add_option("--workers", workers, "worker pool size for sweeps")
        ->envname("QDE_WORKERS");
    app.add_option("--format", format, "table format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* spectrum = app.add_subcommand("spectrum", "symmetric qubit spectrum vs Delta/t_c");
    auto* stability = app.add_subcommand("stability", "charge stability diagrams");
    auto* dipole = app.add_subcommand("dipole", "mediator dipole elements and Rabi frequency");
    auto* coupling = app.add_subcommand("coupling", "K_ab sweep over mediator size");
    auto* gate = app.add_subcommand("gate", "gate parameters and target-distance report");
    auto* fidelity = app.add_subcommand("fidelity-map", "fidelity vs dephasing rates");
    auto* leakage = app.add_subcommand("leakage", "32-dimensional leakage bound run");
    auto* validate = app.add_subcommand("validate", "run all quoted-value cross-checks");

    CLI11_PARSE(app, argc, argv);

    try {
        qde::RunConfig cfg =
            config_path.empty() ? qde::RunConfig{} : qde::parse_config_file(config_path);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (!format.empty()) cfg.format = format;

        qde::RunManifest manifest(cfg.out_dir, qde::checksum_hex(qde::canonical_config_text(cfg)),
                                  qde::cli::kVersion);

        qde::cli::CmdResult res;
        int code = kExitOk;
        if (spectrum->parsed()) res = qde::cli::cmd_spectrum(cfg, manifest);
        else if (stability->parsed()) res = qde::cli::cmd_stability(cfg, manifest, workers);
        else if (dipole->parsed()) res = qde::cli::cmd_dipole(cfg, manifest);
        else if (coupling->parsed()) res = qde::cli::cmd_coupling(cfg, manifest, workers);
        else if (gate->parsed()) res = qde::cli::cmd_gate(cfg, manifest);
        else if (fidelity->parsed()) res = qde::cli::cmd_fidelity_map(cfg, manifest, workers);
        else if (leakage->parsed()) res = qde::cli::cmd_leakage(cfg, manifest);
        else if (validate->parsed()) {
            const auto rep = qde::cli::cmd_validate(cfg, manifest);
            std::printf("%-34s %14s %14s %10s  %s\n", "check", "measured", "expected", "tol", "status");
            for (const auto& ch : rep.checks)
                std::printf("%-34s %14.6g %14.6g %10.3g  %s\n", ch.name.c_str(), ch.measured,
                            ch.expected, ch.tol, ch.pass ? "pass" : "FAIL");
            std::printf("validate: %s\n", rep.all_pass ? "all checks pass" : "FAILURES present");
            res.summary = rep.summary;
            if (!rep.all_pass) code = kExitAcceptance;
        }

        if (!res.summary.empty()) std::cout << res.summary.dump(2) << "\n";
        for (const auto& f : res.files) std::fprintf(stderr, "wrote %s\n", f.c_str());
        manifest.finalize();
        return code;
    } catch (const qde::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const qde::ValidityViolationError& e) {
        std::fprintf(stderr, "validity violation: %s\n", e.what());
        return kExitValidity;
    } catch (const qde::ConditionViolationError& e) {
        std::fprintf(stderr, "condition violation: %s\n", e.what());
        return kExitValidity;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
