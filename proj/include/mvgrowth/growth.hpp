#ifndef MVGROWTH_GROWTH_HPP
#define MVGROWTH_GROWTH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "mvgrowth/power_series.hpp"
#include "mvgrowth/sampling.hpp"

namespace mvg {

/// log |f(z)| at a point, in log magnitude (may be -inf at zeros).
using LogAbsFn = std::function<double(const Point&)>;

LogAbsFn log_abs_fn(const PowerSeries& f);
/// Meromorphic input as an explicit coprime pair f = g/h, evaluated pointwise.
LogAbsFn quotient_log_abs_fn(const PowerSeries& g, const PowerSeries& h);

/// Monte Carlo estimate with standard error; `rejected` counts samples
/// discarded by the underflow guard (log|f| < -1e3).
struct MCEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long rejected = 0;
};

/// m(r,f): mean of log+ |f| over sigma samples on S(r).
MCEstimate proximity(const LogAbsFn& f, int m, double r, int count, uint64_t seed);

/// Signed sphere mean of log |f| over S(r), with underflow rejection.
MCEstimate sphere_log_integral(const LogAbsFn& f, int m, double r, int count, uint64_t seed);

/// N(r, r0) for entire f via Jensen differencing of sphere log integrals.
/// Uses common random directions at both radii.
MCEstimate valence_jensen(const LogAbsFn& f, int m, double r, double r0, int count, uint64_t seed);

/// Mean of the counting function n over [t1, t2] in log scale:
/// (N(t2) - N(t1)) / log(t2/t1).
MCEstimate counting_from_valence(const LogAbsFn& f, int m, double t1, double t2, int count,
                                 uint64_t seed);

/// log max_k ||a_k||_1 r^k; -inf for the zero series.
double log_max_term(const HomogeneousNorms& norms, double r);
double log_max_term(const PowerSeries& f, double r);

/// Largest degree attaining the maximum term (relative log-space tol 1e-12).
int central_index(const HomogeneousNorms& norms, double r);
int central_index(const PowerSeries& f, double r);

/// Geometric radius grid r_k = r0 q^k, k = 0..count-1; all radii > 1.
struct RadiusGrid {
    double r0 = 1.5;
    double ratio = 1.2;
    int count = 12;

    std::vector<double> radii() const;
    double log_length() const;
};

/// Per-radius growth record for one function.
struct GrowthProfile {
    double r = 0.0;
    double log_max_term = kNegInf;
    int central_index = 0;
    double log_M_sphere = kNegInf;
    double log_M_torus = kNegInf;
    double proximity = 0.0;
    double proximity_stderr = 0.0;
    double valence = 0.0;
    bool trusted = false;
};

struct ProfileOptions {
    int samples = 2000;
    int restarts = 8;
    double jensen_r0 = 1.25;
    uint64_t seed = 1;
    int jobs = 1;
};

std::vector<GrowthProfile> compute_profiles(const PowerSeries& f, const RadiusGrid& grid,
                                            const ProfileOptions& opt);

enum class GrowthSource { max_term, central_index, max_modulus };

/// limsup log^+ log^+ (source) / log r, approximated by the max least-squares
/// slope over 4-point windows in the trailing half of the trusted grid.
/// Requires >= 8 trusted radii.
double order_estimate(const std::vector<GrowthProfile>& profiles, GrowthSource source);

/// One extra log: limsup log^+ log^+ log^+ (source) / log r.
double hyper_order_estimate(const std::vector<GrowthProfile>& profiles, GrowthSource source);

/// Max LS slope of y against x over sliding windows of `window` points,
/// restricted to windows inside the trailing half.
double max_trailing_window_slope(const std::vector<double>& x, const std::vector<double>& y,
                                 int window = 4);

}  // namespace mvg

#endif
