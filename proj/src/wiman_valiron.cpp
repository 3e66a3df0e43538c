#include "mvgrowth/wiman_valiron.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mvg {

namespace {
constexpr double kSlack = 1e-6;
}

ThresholdReport verify_t31(const PowerSeries& f, const RadiusGrid& grid, const WVOptions& opt) {
    const int m = f.dimension();
    const double sqm = std::sqrt(static_cast<double>(m));
    const auto& norms = f.homogeneous_l1_norms();

    ThresholdReport out;
    out.report.theorem = "T3.1";
    out.report.seed = opt.seed;

    size_t k = 0;
    for (double r : grid.radii()) {
        ++k;
        if (!f.trusted_at(r) || !f.trusted_at(sqm * r)) continue;
        RadiusCheck row;
        row.r = r;
        row.lhs_log = log_max_term(norms, r);
        row.rhs_log = m * max_modulus_sphere(f, sqm * r, opt.restarts,
                                             mix_seed(opt.seed, 500 + k))
                              .log_magnitude;
        row.satisfied = row.lhs_log <= row.rhs_log + kSlack;
        out.report.rows.push_back(row);
    }
    out.report.finalize_violations();

    // smallest radius above which every check passes
    out.threshold_radius = 0.0;
    out.passes_above_threshold = !out.report.rows.empty();
    for (const auto& row : out.report.rows)
        if (!row.satisfied) out.threshold_radius = row.r;
    if (out.threshold_radius > 0.0) {
        bool after = false;
        for (const auto& row : out.report.rows)
            if (row.r > out.threshold_radius && !row.satisfied) after = true;
        out.passes_above_threshold = !after &&
                                     out.report.rows.back().r > out.threshold_radius;
    }
    return out;
}

InequalityReport verify_t32(const PowerSeries& f, const RadiusGrid& grid, const WVOptions& opt) {
    const auto& norms = f.homogeneous_l1_norms();

    InequalityReport rep;
    rep.theorem = "T3.2";
    rep.seed = opt.seed;
    size_t k = 0;
    for (double r : grid.radii()) {
        ++k;
        const double R = 2.0 * r;
        if (!f.trusted_at(r) || !f.trusted_at(R)) continue;
        RadiusCheck row;
        row.r = r;
        row.lhs_log = max_modulus_sphere(f, r, opt.restarts, mix_seed(opt.seed, 600 + k))
                          .log_magnitude;
        const double nu_R = f.is_zero() ? 0.0 : central_index(norms, R);
        row.rhs_log = log_max_term(norms, r) + std::log(nu_R + R / (R - r));
        row.satisfied = row.lhs_log <= row.rhs_log + kSlack;
        rep.rows.push_back(row);
    }
    rep.finalize_violations();
    return rep;
}

double OrderAgreement::max_pairwise_difference() const {
    return std::max({std::abs(rho_max_modulus - rho_max_term),
                     std::abs(rho_max_modulus - rho_central_index),
                     std::abs(rho_max_term - rho_central_index)});
}

OrderAgreement verify_t33(const std::vector<GrowthProfile>& profiles) {
    OrderAgreement a;
    a.rho_max_modulus = order_estimate(profiles, GrowthSource::max_modulus);
    a.rho_max_term = order_estimate(profiles, GrowthSource::max_term);
    a.rho_central_index = order_estimate(profiles, GrowthSource::central_index);
    return a;
}

std::vector<WVRecord> wv_ratio_check(const PowerSeries& f, const MultiIndex& I,
                                     const std::vector<std::complex<double>>& linear_form,
                                     const RadiusGrid& grid, const WVOptions& opt) {
    const int m = f.dimension();
    if (static_cast<int>(linear_form.size()) != m)
        throw std::invalid_argument("wv_ratio_check: linear form dimension mismatch");
    bool all_zero = true;
    for (const auto& a : linear_form) {
        if (a == std::complex<double>(0.0, 0.0))
            throw std::invalid_argument("wv_ratio_check: linear form coefficients must be non-zero");
        all_zero = false;
    }
    if (all_zero) throw std::invalid_argument("wv_ratio_check: empty linear form");
    if (!(opt.delta > 0.0 && opt.delta < 0.25))
        throw std::invalid_argument("wv_ratio_check: delta must be in (0, 1/4)");

    const double sqm = std::sqrt(static_cast<double>(m));
    const PowerSeries df = f.derivative(I);
    const int n = I.degree();
    const auto& norms = f.homogeneous_l1_norms();

    std::vector<WVRecord> out;
    size_t k = 0;
    for (double r : grid.radii()) {
        ++k;
        if (!f.trusted_at(sqm * r)) continue;
        const uint64_t rs = mix_seed(opt.seed, 700 + k);

        WVRecord rec;
        rec.r = r;
        rec.delta = opt.delta;
        rec.central_index = central_index(norms, r);

        const TorusModulusMax tm = max_modulus_torus(f, r, opt.restarts, rs);
        rec.argmax = tm.argmax;
        rec.log_f_at_argmax = tm.log_magnitude;
        rec.log_M_sphere =
            max_modulus_sphere(f, sqm * r, opt.restarts, mix_seed(rs, 1)).log_magnitude;
        rec.condition_ok = rec.log_f_at_argmax >
                           rec.log_M_sphere +
                               (-0.25 + opt.delta) * std::log(static_cast<double>(rec.central_index));

        const Point z = rec.argmax.embed();
        std::complex<double> L{0.0, 0.0};
        for (int j = 0; j < m; ++j) L += linear_form[static_cast<size_t>(j)] * z[static_cast<size_t>(j)];
        const LogScaled Ls = LogScaled::from(L);
        if (Ls.log_abs() < std::log(r) - 300.0) {
            // z_r sits on the divisor of L; the theorem excludes such radii
            rec.valid = false;
            out.push_back(rec);
            continue;
        }

        const LogScaled fz = f.eval(z);
        const LogScaled ratio = df.eval(z) / fz;
        const LogScaled nu = LogScaled::from({static_cast<double>(rec.central_index), 0.0});
        const LogScaled scaled = ratio * (Ls / nu).pow_int(n);
        const LogScaled err = scaled - LogScaled::from({1.0, 0.0});
        rec.eta = std::exp(err.log_abs());
        out.push_back(rec);
    }
    return out;
}

double exceptional_set_estimate(const std::vector<WVRecord>& records, double eta_threshold) {
    double measure = 0.0;
    for (size_t i = 0; i + 1 < records.size(); ++i) {
        const bool violates =
            !records[i].valid || !records[i].condition_ok || records[i].eta > eta_threshold;
        if (violates) measure += std::log(records[i + 1].r / records[i].r);
    }
    return measure;
}

}  // namespace mvg
