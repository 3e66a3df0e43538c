#ifndef MVGROWTH_REPORT_HPP
#define MVGROWTH_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mvg {

/// Per-theorem verification result over a radius grid. The exceptional set is
/// operationalized as the violating grid intervals; `violation_log_measure`
/// estimates its logarithmic measure.
struct RadiusCheck {
    double r = 0.0;
    double lhs_log = 0.0;
    double rhs_log = 0.0;
    bool satisfied = true;

    double margin() const { return rhs_log - lhs_log; }
};

struct InequalityReport {
    std::string theorem;
    std::vector<RadiusCheck> rows;
    /// max over radii of exp(lhs_log - rhs_core_log); the fitted constant B.
    double empirical_constant = 0.0;
    std::vector<double> violating_radii;
    double violation_log_measure = 0.0;
    double grid_log_length = 0.0;
    uint64_t seed = 0;

    bool all_satisfied() const;
    /// Fill violating_radii and violation_log_measure from rows (geometric
    /// grid assumed; the interval left of each violating radius counts).
    void finalize_violations();
};

/// Deterministic CSV (LF, '.' decimal, %.17g). Columns:
/// theorem,r,lhs_log,rhs_log,margin,satisfied,empirical_B,seed
void write_report_csv(std::ostream& os, const InequalityReport& rep);

std::string format_double(double v);

}  // namespace mvg

#endif
