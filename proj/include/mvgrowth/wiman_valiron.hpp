#ifndef MVGROWTH_WIMAN_VALIRON_HPP
#define MVGROWTH_WIMAN_VALIRON_HPP

#include <cstdint>
#include <vector>

#include "mvgrowth/growth.hpp"
#include "mvgrowth/multi_index.hpp"
#include "mvgrowth/power_series.hpp"
#include "mvgrowth/report.hpp"
#include "mvgrowth/sampling.hpp"

namespace mvg {

struct WVOptions {
    int restarts = 8;
    double delta = 0.1;  // in (0, 1/4)
    uint64_t seed = 1;
};

/// mu(r) <= M^m(sqrt(m) r): checked per trusted radius; reports the smallest
/// threshold radius above which all checks pass.
struct ThresholdReport {
    InequalityReport report;
    double threshold_radius = 0.0;  // 0 when everything passes
    bool passes_above_threshold = false;
};

ThresholdReport verify_t31(const PowerSeries& f, const RadiusGrid& grid, const WVOptions& opt);

/// M(r) <= mu(r) (nu(R) + R/(R-r)) with R = 2r. The searched M is a lower
/// bound, so a PASS is conservative.
InequalityReport verify_t32(const PowerSeries& f, const RadiusGrid& grid, const WVOptions& opt);

struct OrderAgreement {
    double rho_max_modulus = 0.0;
    double rho_max_term = 0.0;
    double rho_central_index = 0.0;

    double max_pairwise_difference() const;
};

OrderAgreement verify_t33(const std::vector<GrowthProfile>& profiles);

/// One radius of the central asymptotic check: at the torus argmax z_r,
/// d^I f / f should equal (nu(r)/L(z_r))^{|I|} up to 1 + o(1).
struct WVRecord {
    double r = 0.0;
    TorusPoint argmax;
    double log_f_at_argmax = kNegInf;
    double log_M_sphere = kNegInf;  // at radius sqrt(m) r
    int central_index = 0;
    bool condition_ok = false;      // |f(z_r)| > M(sqrt(m) r) nu(r)^{-1/4+delta}
    bool valid = true;              // false when L(z_r) ~ 0
    double eta = 0.0;               // |(d^I f/f)(z_r) (L(z_r)/nu(r))^{|I|} - 1|
    double delta = 0.0;
};

std::vector<WVRecord> wv_ratio_check(const PowerSeries& f, const MultiIndex& I,
                                     const std::vector<std::complex<double>>& linear_form,
                                     const RadiusGrid& grid, const WVOptions& opt);

/// Sum of log(r_{k+1}/r_k) over intervals whose left endpoint violates
/// (eta above threshold, condition failed, or invalid record).
double exceptional_set_estimate(const std::vector<WVRecord>& records, double eta_threshold);

}  // namespace mvg

#endif
