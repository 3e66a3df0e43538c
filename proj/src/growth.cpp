#include "mvgrowth/growth.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

namespace mvg {

namespace {

constexpr double kUnderflowLog = -1e3;

MCEstimate mean_and_stderr(const std::vector<double>& xs, long rejected) {
    MCEstimate e;
    e.rejected = rejected;
    if (xs.empty()) throw std::runtime_error("Monte Carlo estimate: all samples rejected");
    double mean = 0.0;
    for (double v : xs) mean += v;
    mean /= static_cast<double>(xs.size());
    double var = 0.0;
    for (double v : xs) var += (v - mean) * (v - mean);
    if (xs.size() > 1) var /= static_cast<double>(xs.size() - 1);
    e.value = mean;
    e.std_error = std::sqrt(var / static_cast<double>(xs.size()));
    return e;
}

}  // namespace

LogAbsFn log_abs_fn(const PowerSeries& f) {
    return [f](const Point& z) { return f.eval(z).log_abs(); };
}

LogAbsFn quotient_log_abs_fn(const PowerSeries& g, const PowerSeries& h) {
    if (g.dimension() != h.dimension())
        throw std::invalid_argument("quotient_log_abs_fn: dimension mismatch");
    return [g, h](const Point& z) { return g.eval(z).log_abs() - h.eval(z).log_abs(); };
}

MCEstimate proximity(const LogAbsFn& f, int m, double r, int count, uint64_t seed) {
    auto rng = make_rng(seed);
    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        const Point z = sigma_point(m, r, rng);
        xs.push_back(log_plus(f(z)));
    }
    return mean_and_stderr(xs, 0);
}

MCEstimate sphere_log_integral(const LogAbsFn& f, int m, double r, int count, uint64_t seed) {
    auto rng = make_rng(seed);
    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(count));
    long rejected = 0;
    for (int i = 0; i < count; ++i) {
        const Point z = sigma_point(m, r, rng);
        const double v = f(z);
        if (v < kUnderflowLog) {
            ++rejected;
            continue;
        }
        xs.push_back(v);
    }
    return mean_and_stderr(xs, rejected);
}

MCEstimate valence_jensen(const LogAbsFn& f, int m, double r, double r0, int count,
                          uint64_t seed) {
    if (!(1.0 < r0 && r0 < r))
        throw std::invalid_argument("valence_jensen: need 1 < r0 < r");
    auto rng = make_rng(seed);
    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(count));
    long rejected = 0;
    for (int i = 0; i < count; ++i) {
        Point w = sigma_point(m, 1.0, rng);
        Point zr = w, z0 = w;
        for (auto& v : zr) v *= r;
        for (auto& v : z0) v *= r0;
        const double a = f(zr), b = f(z0);
        if (a < kUnderflowLog || b < kUnderflowLog) {
            ++rejected;
            continue;
        }
        xs.push_back(a - b);
    }
    return mean_and_stderr(xs, rejected);
}

MCEstimate counting_from_valence(const LogAbsFn& f, int m, double t1, double t2, int count,
                                 uint64_t seed) {
    if (!(1.0 < t1 && t1 < t2))
        throw std::invalid_argument("counting_from_valence: need 1 < t1 < t2");
    MCEstimate e = valence_jensen(f, m, t2, t1, count, seed);
    const double s = std::log(t2 / t1);
    e.value /= s;
    e.std_error /= s;
    return e;
}

double log_max_term(const HomogeneousNorms& norms, double r) {
    if (r <= 0.0) throw std::invalid_argument("log_max_term: r must be > 0");
    const double logr = std::log(r);
    double best = kNegInf;
    for (size_t k = 0; k < norms.values.size(); ++k)
        if (norms.values[k] > 0.0)
            best = std::max(best, std::log(norms.values[k]) + static_cast<double>(k) * logr);
    return best;
}

double log_max_term(const PowerSeries& f, double r) {
    return log_max_term(f.homogeneous_l1_norms(), r);
}

int central_index(const HomogeneousNorms& norms, double r) {
    if (r <= 0.0) throw std::invalid_argument("central_index: r must be > 0");
    const double best = log_max_term(norms, r);
    if (best == kNegInf) throw std::domain_error("central_index: zero series");
    const double logr = std::log(r);
    const double tol = 1e-12 * std::max(1.0, std::abs(best));
    int nu = 0;
    for (size_t k = 0; k < norms.values.size(); ++k)
        if (norms.values[k] > 0.0 &&
            std::log(norms.values[k]) + static_cast<double>(k) * logr >= best - tol)
            nu = static_cast<int>(k);  // ties resolve to the largest degree
    return nu;
}

int central_index(const PowerSeries& f, double r) {
    return central_index(f.homogeneous_l1_norms(), r);
}

std::vector<double> RadiusGrid::radii() const {
    if (r0 <= 1.0 || ratio <= 1.0 || count < 1)
        throw std::invalid_argument("RadiusGrid: need r0 > 1, ratio > 1, count >= 1");
    std::vector<double> rs(static_cast<size_t>(count));
    double r = r0;
    for (auto& v : rs) {
        v = r;
        r *= ratio;
    }
    return rs;
}

double RadiusGrid::log_length() const {
    return static_cast<double>(count - 1) * std::log(ratio);
}

std::vector<GrowthProfile> compute_profiles(const PowerSeries& f, const RadiusGrid& grid,
                                            const ProfileOptions& opt) {
    const auto rs = grid.radii();
    const int m = f.dimension();
    const auto& norms = f.homogeneous_l1_norms();
    const LogAbsFn lf = log_abs_fn(f);

    auto one = [&](size_t k) {
        const double r = rs[k];
        GrowthProfile p;
        p.r = r;
        p.trusted = f.trusted_at(r);
        p.log_max_term = log_max_term(norms, r);
        if (!f.is_zero()) p.central_index = central_index(norms, r);
        const uint64_t rseed = mix_seed(opt.seed, 100 + k);
        if (p.trusted) {
            p.log_M_sphere = max_modulus_sphere(f, r, opt.restarts, rseed).log_magnitude;
            const double torus_host = std::sqrt(static_cast<double>(m)) * r;
            if (f.trusted_at(torus_host))
                p.log_M_torus = max_modulus_torus(f, r, opt.restarts, rseed).log_magnitude;
            const MCEstimate prox = proximity(lf, m, r, opt.samples, rseed);
            p.proximity = prox.value;
            p.proximity_stderr = prox.std_error;
            if (!f.is_zero() && r > opt.jensen_r0 && opt.jensen_r0 > 1.0)
                p.valence = valence_jensen(lf, m, r, opt.jensen_r0, opt.samples, rseed).value;
        }
        return p;
    };

    std::vector<GrowthProfile> out(rs.size());
    if (opt.jobs <= 1) {
        for (size_t k = 0; k < rs.size(); ++k) out[k] = one(k);
    } else {
        // deterministic: per-radius derived seeds, results joined in order
        std::vector<std::future<GrowthProfile>> futs;
        futs.reserve(rs.size());
        for (size_t k = 0; k < rs.size(); ++k)
            futs.push_back(std::async(std::launch::async, one, k));
        for (size_t k = 0; k < rs.size(); ++k) out[k] = futs[k].get();
    }
    return out;
}

namespace {

double ls_slope(const std::vector<double>& x, const std::vector<double>& y, size_t lo,
                size_t n) {
    double mx = 0.0, my = 0.0;
    for (size_t i = lo; i < lo + n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (size_t i = lo; i < lo + n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

// log^+ composed k times, floored so degenerate small values cannot blow
// up the slope estimate
double iterated_log_plus(double v, int k) {
    for (int i = 0; i < k; ++i) v = std::log(std::max(v, 1.0));
    return v;
}

double growth_slope(const std::vector<GrowthProfile>& profiles, GrowthSource source,
                    int extra_logs) {
    std::vector<double> x, y;
    for (const auto& p : profiles) {
        if (!p.trusted) continue;
        double v;
        switch (source) {
            case GrowthSource::max_term:
                // log mu is stored; one outer log gives log log mu
                v = iterated_log_plus(std::max(p.log_max_term, 0.0), 1 + extra_logs);
                break;
            case GrowthSource::central_index:
                v = iterated_log_plus(static_cast<double>(p.central_index), 1 + extra_logs);
                break;
            case GrowthSource::max_modulus:
                v = iterated_log_plus(std::max(p.log_M_sphere, 0.0), 1 + extra_logs);
                break;
            default:
                throw std::logic_error("unknown growth source");
        }
        x.push_back(std::log(p.r));
        y.push_back(v);
    }
    if (x.size() < 8)
        throw std::domain_error("order estimate: need at least 8 trusted radii");
    return max_trailing_window_slope(x, y);
}

}  // namespace

double max_trailing_window_slope(const std::vector<double>& x, const std::vector<double>& y,
                                 int window) {
    const size_t n = x.size();
    const size_t w = static_cast<size_t>(window);
    if (n < w) throw std::invalid_argument("max_trailing_window_slope: too few points");
    const size_t start = n / 2;  // windows fully inside the trailing half
    double best = -std::numeric_limits<double>::infinity();
    for (size_t lo = start; lo + w <= n; ++lo) best = std::max(best, ls_slope(x, y, lo, w));
    if (!std::isfinite(best)) best = ls_slope(x, y, n - w, w);
    return best;
}

double order_estimate(const std::vector<GrowthProfile>& profiles, GrowthSource source) {
    return growth_slope(profiles, source, 0);
}

double hyper_order_estimate(const std::vector<GrowthProfile>& profiles, GrowthSource source) {
    return growth_slope(profiles, source, 1);
}

}  // namespace mvg
