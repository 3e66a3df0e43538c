#ifndef MVGROWTH_LOG_SCALED_HPP
#define MVGROWTH_LOG_SCALED_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace mvg {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Complex value in split magnitude form: value = mantissa * exp(log_scale).
/// Keeps |f| computable far past the range of native doubles (M(r) ~ e^{2r}).
struct LogScaled {
    std::complex<double> mantissa{0.0, 0.0};
    double log_scale = kNegInf;

    static LogScaled zero() { return {}; }

    static LogScaled from(std::complex<double> v) {
        if (v == std::complex<double>(0.0, 0.0)) return zero();
        const double a = std::abs(v);
        return {v / a, std::log(a)};
    }

    bool is_zero() const { return mantissa == std::complex<double>(0.0, 0.0); }

    /// log |value|; -inf for zero.
    double log_abs() const {
        if (is_zero()) return kNegInf;
        return log_scale + std::log(std::abs(mantissa));
    }

    double arg() const { return std::arg(mantissa); }

    /// Native complex value; may overflow/underflow for extreme log_scale.
    std::complex<double> value() const {
        if (is_zero()) return {0.0, 0.0};
        return mantissa * std::exp(log_scale);
    }

    LogScaled normalized() const {
        if (is_zero()) return zero();
        const double a = std::abs(mantissa);
        return {mantissa / a, log_scale + std::log(a)};
    }

    friend LogScaled operator*(const LogScaled& a, const LogScaled& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return LogScaled{a.mantissa * b.mantissa, a.log_scale + b.log_scale}.normalized();
    }

    friend LogScaled operator/(const LogScaled& a, const LogScaled& b) {
        return LogScaled{a.mantissa / b.mantissa, a.log_scale - b.log_scale}.normalized();
    }

    friend LogScaled operator+(const LogScaled& a, const LogScaled& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const LogScaled an = a.normalized(), bn = b.normalized();
        const double s = std::max(an.log_scale, bn.log_scale);
        const std::complex<double> m =
            an.mantissa * std::exp(an.log_scale - s) + bn.mantissa * std::exp(bn.log_scale - s);
        if (m == std::complex<double>(0.0, 0.0)) return zero();
        return LogScaled{m, s}.normalized();
    }

    friend LogScaled operator-(const LogScaled& a, const LogScaled& b) {
        return a + LogScaled{-b.mantissa, b.log_scale};
    }

    LogScaled pow_int(int n) const {
        if (is_zero()) return n == 0 ? from({1.0, 0.0}) : zero();
        const LogScaled nn = normalized();
        return LogScaled{std::polar(1.0, n * std::arg(nn.mantissa)), n * nn.log_scale};
    }
};

inline double log_plus(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace mvg

#endif
