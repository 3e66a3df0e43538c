#ifndef MVGROWTH_POWER_SERIES_HPP
#define MVGROWTH_POWER_SERIES_HPP

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mvgrowth/log_scaled.hpp"
#include "mvgrowth/multi_index.hpp"

namespace mvg {

/// Degree-bucketed l1 sums of coefficient moduli, ||a_k||_1 for k = 0..D.
struct HomogeneousNorms {
    std::vector<double> values;

    int max_degree() const { return static_cast<int>(values.size()) - 1; }
};

/// Sparse truncated Taylor series of an entire function on C^m.
///
/// All coefficients of total degree > truncation_degree are absent by
/// construction. `exact` marks series whose tail is identically zero
/// (polynomials and their images under degree-preserving ops); such series
/// are trusted at every radius. Immutable after construction.
class PowerSeries {
public:
    using Coeff = std::complex<double>;
    using CoeffMap = std::map<MultiIndex, Coeff>;
    using Term = std::pair<MultiIndex, Coeff>;

    PowerSeries(int dimension, int truncation_degree, CoeffMap coefficients, bool exact);

    /// Canonical sparse polynomial; duplicate indices are an error.
    static PowerSeries polynomial(int dimension, const std::vector<Term>& terms);

    static PowerSeries zero(int dimension, int truncation_degree = 0);

    static PowerSeries constant(int dimension, Coeff c);

    /// Taylor series of exp(a_1 z_1 + ... + a_m z_m) truncated at degree D.
    static PowerSeries exp_of_linear(const std::vector<Coeff>& a, int truncation_degree);

    int dimension() const { return dim_; }
    int truncation_degree() const { return trunc_; }
    bool exact() const { return exact_; }
    bool is_zero() const { return coef_.empty(); }
    const CoeffMap& coefficients() const { return coef_; }
    Coeff coefficient(const MultiIndex& alpha) const;

    PowerSeries add(const PowerSeries& other) const;
    PowerSeries mul(const PowerSeries& other) const;
    PowerSeries scale(Coeff c) const;

    /// d^I, term-by-term; truncation degree drops by |I| (floor 0).
    PowerSeries derivative(const MultiIndex& I) const;

    /// Termwise antiderivative in z_1 with zero constant of integration.
    PowerSeries antiderivative_z1() const;

    /// Same coefficients under a larger truncation degree (so products are
    /// not cut short). Exactness is preserved only for exact series.
    PowerSeries padded(int truncation_degree) const;

    const HomogeneousNorms& homogeneous_l1_norms() const { return norms_; }

    /// log ||a_k||_1 per degree (-inf where absent), cached.
    const std::vector<double>& log_norms() const { return log_norms_; }

    /// f(z) in split magnitude form. scale_degree recentres the internal
    /// accumulation scale at |z|^k (maximum-term scaling); the result is the
    /// same value either way.
    LogScaled eval(std::span<const Coeff> z, std::optional<int> scale_degree = {}) const;

    /// Convenience for moderate |z| where the native value cannot overflow.
    Coeff eval_value(std::span<const Coeff> z) const { return eval(z).value(); }

    /// Truncation trust: r is trusted iff the series is exact, or the central
    /// index stays `margin` degrees below D and the last `margin` terms
    /// ||a_k||_1 r^k decay by at least a factor 2 across the window.
    bool trusted_at(double r, int margin = 10) const;

private:
    int dim_;
    int trunc_;
    bool exact_;
    CoeffMap coef_;
    HomogeneousNorms norms_;
    std::vector<double> log_norms_;

    void finalize();
};

/// exp(g) as a formal series truncated at g's truncation degree, via the
/// Euler-operator recurrence k h_k = sum_j j g_j h_{k-j}, seeded exp(g_0).
PowerSeries exp_series(const PowerSeries& g);

}  // namespace mvg

#endif
