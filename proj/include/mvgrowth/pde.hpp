#ifndef MVGROWTH_PDE_HPP
#define MVGROWTH_PDE_HPP

#include <cstdint>
#include <vector>

#include "mvgrowth/growth.hpp"
#include "mvgrowth/multi_index.hpp"
#include "mvgrowth/power_series.hpp"
#include "mvgrowth/sampling.hpp"

namespace mvg {

/// Equation d^I f - e^P f = Q with P a non-constant polynomial and I
/// supported on the first coordinate only.
struct PdeInstance {
    MultiIndex I;
    PowerSeries P;
    PowerSeries Q;
    int truncation_degree = 0;
    int deg_n = 0;  // deg P, recorded at validation

    int dimension() const { return P.dimension(); }
    int deg_p() const { return deg_n; }
};

/// Validates: P exact, non-constant; Q exact or trusted; I = (k,0,...,0)
/// with k >= 1; D >= deg P + 2. Throws std::invalid_argument otherwise.
PdeInstance make_instance(const MultiIndex& I, const PowerSeries& P, const PowerSeries& Q,
                          int truncation_degree);

/// Instance built backwards from a chosen solution: Q := d^I f - e^P f.
/// Supports |I| > 1, where no constructive solver exists here.
PdeInstance tautological_instance(const PowerSeries& f, const MultiIndex& I,
                                  const PowerSeries& P);

/// First-order constructive solution (|I| = 1): writes f as z_1-strata
/// f = sum_k f_k(z_2..z_m) z_1^k and solves (k+1) f_{k+1} = [e^P f + Q]_k.
/// The initial stratum f_0 defaults to 1; an overload accepts a polynomial
/// in z_2..z_m (no z_1 dependence).
PowerSeries solve_first_order(const PdeInstance& inst);
PowerSeries solve_first_order(const PdeInstance& inst, const PowerSeries& f0);

/// Max over points of |d^I f - e^{P(z)} f - Q| / (1 + |e^{P(z)} f|), with
/// e^{P(z)} evaluated exactly from the polynomial P (no series truncation).
/// Throws std::domain_error if a point lies outside a trusted radius.
double residual(const PdeInstance& inst, const PowerSeries& f, const std::vector<Point>& points);

/// Per-radius T(r,Q)/T(r,f) with T = proximity for entire functions.
struct SmallnessReport {
    std::vector<double> radii;
    std::vector<double> ratios;
    bool decreasing = false;  // top-decile mean <= bottom-decile mean
};

SmallnessReport smallness_check(const PowerSeries& f, const PowerSeries& Q,
                                const RadiusGrid& grid, int samples, uint64_t seed);

struct T41Options {
    double tolerance = 0.3;   // |rho1_hat - deg P| bracket at desk scale
    double drift_tol = 0.5;   // allowed half-to-half drift of the invariants
    int samples = 2000;
    int residual_points = 20;
    double residual_radius = 1.0;
    double residual_tol = 1e-8;
    uint64_t seed = 1;
};

struct T41Report {
    double rho1_hat = 0.0;
    int deg_p = 0;
    double max_residual = 0.0;
    bool residual_ok = false;
    bool smallness_ok = false;
    bool order_ok = false;
    std::vector<double> radii;             // trusted radii used
    std::vector<double> lower_invariant;   // log log nu(r) - deg P * log r
    std::vector<double> upper_invariant;   // ... - log log r
    bool lower_bounded = false;
    bool upper_bounded = false;

    bool passed() const {
        return residual_ok && smallness_ok && order_ok && lower_bounded && upper_bounded;
    }
};

/// Hyper-order bracket |rho1_hat - deg P| <= tolerance plus the two
/// bounded-invariant checks along the trusted part of the grid.
T41Report verify_t41(const PdeInstance& inst, const PowerSeries& f, const RadiusGrid& grid,
                     const T41Options& opt);

}  // namespace mvg

#endif
