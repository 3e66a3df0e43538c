#ifndef MVGROWTH_HARNESS_HPP
#define MVGROWTH_HARNESS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mvgrowth/growth.hpp"

namespace mvg {

/// Configuration problems map to exit code 2 in the CLI.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One experiment: a function (family or coefficient file), a radius grid,
/// sampler budgets, and the theorem checks to run.
struct ExperimentConfig {
    std::string family_name;            // empty when series_file is used
    nlohmann::json family_params = nlohmann::json::object();
    std::string series_file;

    RadiusGrid grid;
    int samples = 2000;
    int restarts = 8;
    uint64_t seed = 0;
    int jobs = 1;
    std::vector<std::string> theorems;  // subset of known_theorems()
    std::string out_dir = ".";

    // per-theorem knobs (defaults per check)
    double alpha_t21 = 1.5;
    double eps_c21 = 0.5;
    double alpha_l24 = 2.0;
    double eta_threshold = 0.5;
    double delta_t34 = 0.1;
    double order_agreement_tol = 0.2;
};

const std::vector<std::string>& known_theorems();

/// Parses and validates a config document. Requirements: explicit seed, grid
/// radii > 1, truncation degree >= 4, known family and theorem names.
/// Throws ConfigError with the offending field echoed.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig parse_config_file(const std::string& path);

/// Runs the experiment: writes growth_profile.csv, one report_<theorem>.csv
/// per selected check, and summary.txt with verdicts
/// PASS / PASS-with-exceptional-set(measure) / FAIL / SKIPPED(untrusted radii).
/// Returns 0 iff no FAIL, 3 when fewer than 8 grid radii are trusted
/// (untrusted-grid abort). Numeric failures propagate as exceptions
/// (exit code 4 in the CLI).
int run_experiment(const ExperimentConfig& cfg);

/// Deterministic profile CSV. Columns:
/// r,log_max_term,central_index,log_M_sphere,log_M_torus,proximity,
/// proximity_stderr,valence,trusted,seed
void write_profile_csv(std::ostream& os, const std::vector<GrowthProfile>& profiles,
                       uint64_t seed);

}  // namespace mvg

#endif
