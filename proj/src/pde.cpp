#include "mvgrowth/pde.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mvg {

namespace {

int series_degree(const PowerSeries& s) {
    const auto& norms = s.homogeneous_l1_norms().values;
    int deg = -1;
    for (size_t k = 0; k < norms.size(); ++k)
        if (norms[k] > 0.0) deg = static_cast<int>(k);
    return deg;
}

void check_first_coordinate_index(const MultiIndex& I, int m) {
    if (I.dimension() != m) throw std::invalid_argument("PdeInstance: index dimension mismatch");
    if (I.degree() < 1) throw std::invalid_argument("PdeInstance: need |I| >= 1");
    for (int j = 1; j < m; ++j)
        if (I[j] != 0)
            throw std::invalid_argument("PdeInstance: I must be supported on the first coordinate");
}

/// log(1 + e^l) without overflow.
double softplus(double l) {
    if (l > 40.0) return l;
    if (l < -40.0) return std::exp(l);
    return std::log1p(std::exp(l));
}

double point_norm(const Point& z) {
    double s = 0.0;
    for (const auto& v : z) s += std::norm(v);
    return std::sqrt(s);
}

}  // namespace

PdeInstance make_instance(const MultiIndex& I, const PowerSeries& P, const PowerSeries& Q,
                          int truncation_degree) {
    const int m = P.dimension();
    if (Q.dimension() != m) throw std::invalid_argument("PdeInstance: Q dimension mismatch");
    if (!P.exact()) throw std::invalid_argument("PdeInstance: P must be a polynomial");
    const int n = series_degree(P);
    if (n < 1) throw std::invalid_argument("PdeInstance: P must be non-constant");
    check_first_coordinate_index(I, m);
    if (truncation_degree < n + 2)
        throw std::invalid_argument("PdeInstance: need D >= deg P + 2");
    PdeInstance inst{I, P, Q, truncation_degree, n};
    return inst;
}

PdeInstance tautological_instance(const PowerSeries& f, const MultiIndex& I,
                                  const PowerSeries& P) {
    const int D = f.truncation_degree();
    const PowerSeries E = exp_series(P.padded(D));
    const PowerSeries Q = f.derivative(I).add(E.mul(f).scale(-1.0));
    return make_instance(I, P, Q, D);
}

PowerSeries solve_first_order(const PdeInstance& inst) {
    return solve_first_order(inst, PowerSeries::constant(inst.dimension(), 1.0));
}

PowerSeries solve_first_order(const PdeInstance& inst, const PowerSeries& f0) {
    const int m = inst.dimension();
    if (inst.I.degree() != 1)
        throw std::invalid_argument("solve_first_order: need |I| = 1");
    if (f0.dimension() != m || f0.is_zero())
        throw std::invalid_argument("solve_first_order: f0 must be a non-zero series on C^m");
    for (const auto& [alpha, c] : f0.coefficients())
        if (alpha[0] != 0)
            throw std::invalid_argument("solve_first_order: f0 must not depend on z_1");

    const int D = inst.truncation_degree;
    const PowerSeries E = exp_series(inst.P.padded(D));

    // bucket the known series by z_1-degree once
    using Term = PowerSeries::Term;
    std::vector<std::vector<Term>> estrata(static_cast<size_t>(D) + 1);
    for (const auto& t : E.coefficients()) estrata[static_cast<size_t>(t.first[0])].push_back(t);
    std::vector<std::vector<Term>> qstrata(static_cast<size_t>(D) + 1);
    for (const auto& t : inst.Q.coefficients()) {
        const int k = t.first[0];
        if (k <= D) qstrata[static_cast<size_t>(k)].push_back(t);
    }
    std::vector<std::vector<Term>> fstrata(static_cast<size_t>(D) + 1);
    for (const auto& t : f0.coefficients())
        if (t.first.degree() <= D) fstrata[0].push_back(t);

    // (k+1) f_{k+1} = [E f + Q]_k, coefficient extraction in z_1
    for (int k = 0; k < D; ++k) {
        PowerSeries::CoeffMap rhs;
        for (int d = 0; d <= k; ++d) {
            for (const auto& [delta, e] : estrata[static_cast<size_t>(d)]) {
                for (const auto& [phi, c] : fstrata[static_cast<size_t>(k - d)]) {
                    if (delta.degree() + phi.degree() > D - 1) continue;
                    rhs[delta.plus(phi)] += e * c;
                }
            }
        }
        for (const auto& [beta, q] : qstrata[static_cast<size_t>(k)])
            if (beta.degree() <= D - 1) rhs[beta] += q;

        auto& next = fstrata[static_cast<size_t>(k) + 1];
        for (const auto& [beta, v] : rhs) {
            if (v == std::complex<double>(0.0, 0.0)) continue;
            next.emplace_back(beta.plus(MultiIndex::unit(m, 0)),
                              v / static_cast<double>(k + 1));
        }
    }

    PowerSeries::CoeffMap coef;
    for (const auto& stratum : fstrata)
        for (const auto& [alpha, c] : stratum) coef[alpha] = c;
    return PowerSeries(m, D, std::move(coef), false);
}

double residual(const PdeInstance& inst, const PowerSeries& f, const std::vector<Point>& points) {
    if (f.dimension() != inst.dimension())
        throw std::invalid_argument("residual: dimension mismatch");
    const PowerSeries df = f.derivative(inst.I);
    double worst = 0.0;
    for (const auto& z : points) {
        const double r = point_norm(z);
        if (!f.trusted_at(r) || !inst.Q.trusted_at(r))
            throw std::domain_error("residual: point outside trusted radius");
        // e^{P(z)} from the polynomial itself, free of series truncation
        const std::complex<double> Pz = inst.P.eval_value(z);
        const LogScaled eP{std::polar(1.0, Pz.imag()), Pz.real()};
        const LogScaled ePf = eP * f.eval(z);
        const LogScaled num = df.eval(z) - ePf - inst.Q.eval(z);
        const double log_den = softplus(ePf.log_abs());
        worst = std::max(worst, std::exp(num.log_abs() - log_den));
    }
    return worst;
}

SmallnessReport smallness_check(const PowerSeries& f, const PowerSeries& Q,
                                const RadiusGrid& grid, int samples, uint64_t seed) {
    SmallnessReport rep;
    const int m = f.dimension();
    const LogAbsFn lf = log_abs_fn(f);
    const LogAbsFn lq = log_abs_fn(Q);
    size_t k = 0;
    for (double r : grid.radii()) {
        ++k;
        if (!f.trusted_at(r) || !Q.trusted_at(r)) continue;
        const uint64_t rs = mix_seed(seed, 800 + k);
        const double Tf = proximity(lf, m, r, samples, rs).value;
        const double TQ = Q.is_zero() ? 0.0 : proximity(lq, m, r, samples, mix_seed(rs, 1)).value;
        rep.radii.push_back(r);
        rep.ratios.push_back(TQ <= 1e-12 ? 0.0 : TQ / std::max(Tf, 1e-12));
    }
    const size_t n = rep.ratios.size();
    if (n == 0) return rep;
    const size_t decile = std::max<size_t>(1, n / 10);
    double bottom = 0.0, top = 0.0;
    for (size_t i = 0; i < decile; ++i) {
        bottom += rep.ratios[i];
        top += rep.ratios[n - 1 - i];
    }
    rep.decreasing = top <= bottom + 1e-12;
    return rep;
}

T41Report verify_t41(const PdeInstance& inst, const PowerSeries& f, const RadiusGrid& grid,
                     const T41Options& opt) {
    const int m = inst.dimension();
    T41Report rep;
    rep.deg_p = inst.deg_p();

    const SphereSample pts = sample_sigma(m, opt.residual_radius, opt.residual_points,
                                          mix_seed(opt.seed, 900));
    rep.max_residual = residual(inst, f, pts.points);
    rep.residual_ok = rep.max_residual <= opt.residual_tol;

    if (inst.Q.is_zero()) {
        rep.smallness_ok = true;
    } else {
        rep.smallness_ok =
            smallness_check(f, inst.Q, grid, opt.samples, mix_seed(opt.seed, 901)).decreasing;
    }

    std::vector<GrowthProfile> profiles;
    const auto& norms = f.homogeneous_l1_norms();
    for (double r : grid.radii()) {
        GrowthProfile p;
        p.r = r;
        p.trusted = f.trusted_at(r);
        if (p.trusted && !f.is_zero()) p.central_index = central_index(norms, r);
        profiles.push_back(p);
    }
    rep.rho1_hat = hyper_order_estimate(profiles, GrowthSource::central_index);
    rep.order_ok = std::abs(rep.rho1_hat - rep.deg_p) <= opt.tolerance;

    for (const auto& p : profiles) {
        if (!p.trusted || p.central_index < 2) continue;
        const double ll = std::log(std::log(static_cast<double>(p.central_index)));
        const double lower = ll - rep.deg_p * std::log(p.r);
        rep.radii.push_back(p.r);
        rep.lower_invariant.push_back(lower);
        // log^+ log^+ r keeps the correction term finite near r = e
        rep.upper_invariant.push_back(lower - std::log(std::max(std::log(p.r), 1.0)));
    }
    const size_t n = rep.radii.size();
    if (n >= 4) {
        const size_t half = n / 2;
        const double lo1 =
            *std::min_element(rep.lower_invariant.begin(), rep.lower_invariant.begin() + half);
        const double lo2 =
            *std::min_element(rep.lower_invariant.begin() + half, rep.lower_invariant.end());
        rep.lower_bounded = lo2 >= lo1 - opt.drift_tol;
        const double up1 =
            *std::max_element(rep.upper_invariant.begin(), rep.upper_invariant.begin() + half);
        const double up2 =
            *std::max_element(rep.upper_invariant.begin() + half, rep.upper_invariant.end());
        rep.upper_bounded = up2 <= up1 + opt.drift_tol;
    }
    return rep;
}

}  // namespace mvg
