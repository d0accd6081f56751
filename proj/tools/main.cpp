#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "statgeo/config.hpp"
#include "statgeo/errors.hpp"
#include "statgeo/run.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kIoError = 2;
constexpr int kNumericError = 3;

void print_config_error(const statgeo::scenario::ConfigError& e) {
    std::cerr << e.what() << "\n";
}

int do_run(const std::string& config_path, const std::string& out_override,
           bool seed_given, std::uint64_t seed_override, bool no_plots) {
    statgeo::scenario::ScenarioConfig cfg;
    try {
        cfg = statgeo::scenario::load_config(config_path);
    } catch (const statgeo::scenario::ConfigError& e) {
        print_config_error(e);
        return kConfigError;
    } catch (const statgeo::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    }
    if (!out_override.empty()) cfg.output_dir = out_override;
    if (seed_given) cfg.seed = seed_override;
    if (no_plots) cfg.plots = false;

    try {
        auto report = statgeo::scenario::run_scenario(cfg);
        statgeo::scenario::print_report(std::cout, cfg, report);
    } catch (const statgeo::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const statgeo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumericError;
    }
    return kOk;
}

int do_check(const std::string& config_path) {
    try {
        auto cfg = statgeo::scenario::load_config(config_path);
        std::cout << "config OK: kind=" << to_string(cfg.kind)
                  << " output_dir=" << cfg.output_dir << " seed=" << cfg.seed
                  << "\n";
        return kOk;
    } catch (const statgeo::scenario::ConfigError& e) {
        print_config_error(e);
        return kConfigError;
    } catch (const statgeo::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    }
}

void do_list_families() {
    std::cout
        << "gaussian3d               dim 3  (mu_x, mu_y, sigma); optional "
           "correlation r, |r| < 1\n"
        << "rao_gaussian_as_printed  dim 2  (mu, sigma); both diagonal "
           "entries 1/sigma^2\n"
        << "rao_gaussian_standard    dim 2  (mu, sigma); Fisher metric "
           "diag(1/sigma^2, 2/sigma^2)\n"
        << "constant                 dim n  entries given row-major, "
           "identity when omitted\n"
        << "inverse_square_diag      dim n  diag(1/theta_i^2), diagnostic "
           "chart only\n"
        << "numeric_density          quadrature-backed Fisher metric; built "
           "from the fisher-check densities\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"statgeo: geodesics, curvature and exchange statistics on "
                 "economic state manifolds"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    std::uint64_t seed = 0;
    bool no_plots = false;

    auto* run = app.add_subcommand("run", "execute a scenario config");
    run->add_option("config", config_path, "path to the scenario config")
        ->required();
    run->add_option("--out", out_dir, "override the output directory");
    auto* seed_opt =
        run->add_option("--seed", seed, "override the scenario seed");
    run->add_flag("--no-plots", no_plots, "skip SVG output");

    auto* check = app.add_subcommand("check", "validate a config and exit");
    check->add_option("config", config_path, "path to the scenario config")
        ->required();

    auto* families =
        app.add_subcommand("list-families", "print the known metric families");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed())
        return do_run(config_path, out_dir, seed_opt->count() > 0, seed,
                      no_plots);
    if (check->parsed()) return do_check(config_path);
    if (families->parsed()) {
        do_list_families();
        return kOk;
    }
    return kOk;
}
