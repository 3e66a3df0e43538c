#ifndef MVGROWTH_FAMILIES_HPP
#define MVGROWTH_FAMILIES_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mvgrowth/power_series.hpp"

namespace mvg {

struct FamilyInfo {
    std::string name;
    std::string description;
    std::string schema;  // human-readable parameter schema
};

/// Built-in generators: polynomial, exp_linear, exp_poly, exp_exp_linear,
/// pde_solution.
std::vector<FamilyInfo> list_families();

/// Instantiate a family from JSON parameters. Unknown names and invalid
/// parameters throw std::invalid_argument with the offending value echoed.
PowerSeries make_family(const std::string& name, const nlohmann::json& params);

/// Shared helper: polynomial from a JSON term list
/// [{"index": [i1,...,im], "re": x, "im": y}, ...] ("im" optional).
PowerSeries parse_polynomial(int dimension, const nlohmann::json& terms);

}  // namespace mvg

#endif
