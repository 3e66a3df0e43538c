#ifndef MVGROWTH_LOGDERIV_HPP
#define MVGROWTH_LOGDERIV_HPP

#include <cstdint>
#include <vector>

#include "mvgrowth/growth.hpp"
#include "mvgrowth/log_scaled.hpp"
#include "mvgrowth/multi_index.hpp"
#include "mvgrowth/power_series.hpp"
#include "mvgrowth/report.hpp"

namespace mvg {

/// d^{I_n} f(z) / d^I f(z) in split magnitude form. Only |I_n| = |I| + n is
/// required, not componentwise domination. Throws std::domain_error when the
/// denominator vanishes at z.
LogScaled logderiv_ratio(const PowerSeries& f, const MultiIndex& I, const MultiIndex& In,
                         const Point& z);

struct LogderivOptions {
    int points_per_radius = 32;
    int samples = 2000;       // Monte Carlo count for T and n
    uint64_t seed = 1;
    int resample_rounds = 10; // retries when d^I f nearly vanishes at a point
};

/// Per radius: LHS = max sampled |d^{I_n} f / d^I f| (log), RHS core =
/// (T(a^2 r, f)/r + n_{d^I f}(a^2 r)/r)^n. Radii whose LHS/RHS-core exceeds
/// 10x the running median are flagged as candidate exceptional set.
InequalityReport verify_theorem21(const PowerSeries& f, const MultiIndex& I,
                                  const MultiIndex& In, double alpha, const RadiusGrid& grid,
                                  const LogderivOptions& opt);

/// Per radius: max sampled ratio <= r^{n (rho_hat - 1 + eps)} with the
/// module's own order estimate rho_hat.
InequalityReport verify_corollary21(const PowerSeries& f, const MultiIndex& I,
                                    const MultiIndex& In, double eps, const RadiusGrid& grid,
                                    const LogderivOptions& opt);

/// Lemma bound n_{d^I f}(r) <= (|I|+3)/log(alpha) T(alpha r, f), zeros only
/// (entire inputs).
InequalityReport verify_lemma24(const PowerSeries& f, const MultiIndex& I, double alpha,
                                const RadiusGrid& grid, const LogderivOptions& opt);

struct IdentityCheck {
    double max_rel_discrepancy_2nd = 0.0;  // two-factor identity
    double max_rel_discrepancy_3rd = 0.0;  // three-factor identity
    int points_used = 0;
    bool passed = false;
};

/// Verifies the second- and third-order product expansions of logarithmic
/// derivatives of g = d^I f at the given points: both sides evaluated from
/// series derivatives along independent arithmetic routes.
IdentityCheck verify_logderiv_identities(const PowerSeries& f, const MultiIndex& I,
                                         const std::vector<Point>& points,
                                         double tolerance = 1e-8);

}  // namespace mvg

#endif
