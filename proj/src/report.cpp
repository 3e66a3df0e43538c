#include "mvgrowth/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace mvg {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool InequalityReport::all_satisfied() const {
    for (const auto& row : rows)
        if (!row.satisfied) return false;
    return true;
}

void InequalityReport::finalize_violations() {
    violating_radii.clear();
    violation_log_measure = 0.0;
    grid_log_length = 0.0;
    for (size_t i = 0; i < rows.size(); ++i) {
        const double width =
            i + 1 < rows.size() ? std::log(rows[i + 1].r / rows[i].r) : 0.0;
        grid_log_length += width;
        if (!rows[i].satisfied) {
            violating_radii.push_back(rows[i].r);
            violation_log_measure += width;
        }
    }
}

void write_report_csv(std::ostream& os, const InequalityReport& rep) {
    os << "theorem,r,lhs_log,rhs_log,margin,satisfied,empirical_B,seed\n";
    for (const auto& row : rep.rows) {
        os << rep.theorem << "," << format_double(row.r) << "," << format_double(row.lhs_log)
           << "," << format_double(row.rhs_log) << "," << format_double(row.margin()) << ","
           << (row.satisfied ? 1 : 0) << "," << format_double(rep.empirical_constant) << ","
           << rep.seed << "\n";
    }
}

}  // namespace mvg
