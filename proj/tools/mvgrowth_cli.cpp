#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mvgrowth/families.hpp"
#include "mvgrowth/harness.hpp"

namespace {

struct CommonFlags {
    std::string config;
    std::string out;
    int64_t seed = -1;
    int jobs = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool config_required) {
    auto* c = cmd->add_option("--config", flags.config, "experiment config (JSON)");
    if (config_required) c->required();
    cmd->add_option("--out", flags.out, "output directory (overrides config)");
    cmd->add_option("--seed", flags.seed, "seed override");
    cmd->add_option("--jobs", flags.jobs, "parallel jobs override");
}

mvg::ExperimentConfig load(const CommonFlags& flags) {
    mvg::ExperimentConfig cfg = mvg::parse_config_file(flags.config);
    if (!flags.out.empty()) cfg.out_dir = flags.out;
    if (flags.seed >= 0) cfg.seed = static_cast<uint64_t>(flags.seed);
    if (flags.jobs > 0) cfg.jobs = flags.jobs;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mvgrowth: growth functionals and theorem checks for entire "
                 "functions on C^m"};
    app.require_subcommand(1);

    CommonFlags pf, vf, df;
    auto* profile = app.add_subcommand("profile", "growth profile only (no theorem checks)");
    add_common(profile, pf, true);
    auto* verify = app.add_subcommand("verify", "run the theorem checks selected in the config");
    add_common(verify, vf, true);
    auto* families = app.add_subcommand("families", "list built-in function families");
    auto* pde = app.add_subcommand("pde", "solve and check a pde_solution instance (T41)");
    add_common(pde, df, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (families->parsed()) {
            for (const auto& info : mvg::list_families())
                std::cout << info.name << "\n  " << info.description << "\n  params: "
                          << info.schema << "\n";
            return 0;
        }
        mvg::ExperimentConfig cfg;
        if (profile->parsed()) {
            cfg = load(pf);
            cfg.theorems.clear();
        } else if (verify->parsed()) {
            cfg = load(vf);
        } else {
            cfg = load(df);
            cfg.theorems = {"T41"};
            if (cfg.family_name != "pde_solution") {
                std::cerr << "error: pde subcommand requires the pde_solution family\n";
                return 2;
            }
        }
        return mvg::run_experiment(cfg);
    } catch (const mvg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 4;
    }
}
