#include "mvgrowth/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace mvg {

namespace {

constexpr std::complex<double> kZero{0.0, 0.0};

void check_same_dim(const PowerSeries& a, const PowerSeries& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("PowerSeries: dimension mismatch");
}

}  // namespace

PowerSeries::PowerSeries(int dimension, int truncation_degree, CoeffMap coefficients, bool exact)
    : dim_(dimension), trunc_(truncation_degree), exact_(exact), coef_(std::move(coefficients)) {
    if (dim_ < 1) throw std::invalid_argument("PowerSeries: dimension must be >= 1");
    if (trunc_ < 0) throw std::invalid_argument("PowerSeries: truncation degree must be >= 0");
    for (auto it = coef_.begin(); it != coef_.end();) {
        if (it->first.dimension() != dim_)
            throw std::invalid_argument("PowerSeries: index dimension mismatch");
        if (it->first.degree() > trunc_)
            throw std::invalid_argument("PowerSeries: index degree exceeds truncation degree");
        if (it->second == kZero)
            it = coef_.erase(it);  // canonical sparse form
        else
            ++it;
    }
    finalize();
}

void PowerSeries::finalize() {
    norms_.values.assign(static_cast<size_t>(trunc_) + 1, 0.0);
    for (const auto& [alpha, c] : coef_)
        norms_.values[static_cast<size_t>(alpha.degree())] += std::abs(c);
    log_norms_.resize(norms_.values.size());
    for (size_t k = 0; k < norms_.values.size(); ++k)
        log_norms_[k] = norms_.values[k] > 0.0 ? std::log(norms_.values[k]) : kNegInf;
}

PowerSeries PowerSeries::polynomial(int dimension, const std::vector<Term>& terms) {
    CoeffMap m;
    int deg = 0;
    for (const auto& [alpha, c] : terms) {
        if (alpha.dimension() != dimension)
            throw std::invalid_argument("polynomial: index dimension mismatch");
        if (!m.emplace(alpha, c).second)
            throw std::invalid_argument("polynomial: duplicate index " + alpha.to_string());
        deg = std::max(deg, alpha.degree());
    }
    return PowerSeries(dimension, deg, std::move(m), /*exact=*/true);
}

PowerSeries PowerSeries::zero(int dimension, int truncation_degree) {
    return PowerSeries(dimension, truncation_degree, {}, /*exact=*/true);
}

PowerSeries PowerSeries::constant(int dimension, Coeff c) {
    if (c == kZero) return zero(dimension);
    CoeffMap m;
    m.emplace(MultiIndex::zeros(dimension), c);
    return PowerSeries(dimension, 0, std::move(m), /*exact=*/true);
}

PowerSeries PowerSeries::exp_of_linear(const std::vector<Coeff>& a, int truncation_degree) {
    const int m = static_cast<int>(a.size());
    if (m < 1) throw std::invalid_argument("exp_of_linear: empty coefficient vector");
    if (truncation_degree < 0) throw std::invalid_argument("exp_of_linear: negative degree");

    // Coefficient of z^alpha is prod a_j^{alpha_j} / alpha_j!; magnitudes are
    // assembled in log space to postpone underflow to the last moment.
    CoeffMap coeffs;
    std::vector<int> alpha(static_cast<size_t>(m), 0);
    std::vector<double> log_abs_a(a.size());
    std::vector<double> arg_a(a.size());
    for (size_t j = 0; j < a.size(); ++j) {
        log_abs_a[j] = a[j] == kZero ? kNegInf : std::log(std::abs(a[j]));
        arg_a[j] = std::arg(a[j]);
    }

    // iterate all alpha with |alpha| <= D
    auto emit = [&](const std::vector<int>& al) {
        double lm = 0.0, ph = 0.0;
        for (size_t j = 0; j < al.size(); ++j) {
            if (al[j] == 0) continue;
            if (log_abs_a[j] == kNegInf) return;
            lm += al[j] * log_abs_a[j] - std::lgamma(static_cast<double>(al[j]) + 1.0);
            ph += al[j] * arg_a[j];
        }
        const double mag = std::exp(lm);
        if (mag == 0.0) return;
        coeffs.emplace(MultiIndex(al), std::polar(mag, ph));
    };

    // odometer over exponent vectors of total degree <= D
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == m - 1) {
            for (int v = 0; v <= remaining; ++v) {
                alpha[static_cast<size_t>(pos)] = v;
                emit(alpha);
            }
            alpha[static_cast<size_t>(pos)] = 0;
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            alpha[static_cast<size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
        alpha[static_cast<size_t>(pos)] = 0;
    };
    rec(0, truncation_degree);

    return PowerSeries(m, truncation_degree, std::move(coeffs), /*exact=*/false);
}

PowerSeries::Coeff PowerSeries::coefficient(const MultiIndex& alpha) const {
    auto it = coef_.find(alpha);
    return it == coef_.end() ? kZero : it->second;
}

PowerSeries PowerSeries::add(const PowerSeries& other) const {
    check_same_dim(*this, other);
    const int d = std::max(trunc_, other.trunc_);
    CoeffMap m = coef_;
    for (const auto& [alpha, c] : other.coef_) {
        auto [it, inserted] = m.emplace(alpha, c);
        if (!inserted) it->second += c;
    }
    // A sum of exact series is exact; mixing truncated with exact keeps
    // the truncated tail unknown.
    return PowerSeries(dim_, d, std::move(m), exact_ && other.exact_);
}

PowerSeries PowerSeries::mul(const PowerSeries& other) const {
    check_same_dim(*this, other);
    const int d = std::min(trunc_, other.trunc_);
    CoeffMap m;
    for (const auto& [a, ca] : coef_) {
        const int da = a.degree();
        if (da > d) break;  // map iterates by degree
        for (const auto& [b, cb] : other.coef_) {
            if (da + b.degree() > d) break;
            const MultiIndex s = a.plus(b);
            auto [it, inserted] = m.emplace(s, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    // exact only when no true product term was cut off; for exact operands
    // the true degree is that of the last non-zero stratum, not the padding
    auto true_degree = [](const PowerSeries& s) {
        int deg = 0;
        const auto& n = s.homogeneous_l1_norms().values;
        for (size_t k = 0; k < n.size(); ++k)
            if (n[k] > 0.0) deg = static_cast<int>(k);
        return deg;
    };
    const bool ex = exact_ && other.exact_ && true_degree(*this) + true_degree(other) <= d;
    return PowerSeries(dim_, d, std::move(m), ex);
}

PowerSeries PowerSeries::scale(Coeff c) const {
    CoeffMap m;
    if (c != kZero)
        for (const auto& [alpha, v] : coef_) m.emplace(alpha, c * v);
    return PowerSeries(dim_, trunc_, std::move(m), exact_);
}

PowerSeries PowerSeries::derivative(const MultiIndex& I) const {
    if (I.dimension() != dim_)
        throw std::invalid_argument("derivative: index dimension mismatch");
    const int n = I.degree();
    if (n == 0) return *this;
    CoeffMap m;
    for (const auto& [alpha, c] : coef_) {
        if (!alpha.dominates(I)) continue;
        double factor = 1.0;
        for (int j = 0; j < dim_; ++j)
            for (int v = alpha[j] - I[j] + 1; v <= alpha[j]; ++v) factor *= v;
        m.emplace(alpha.minus(I), factor * c);
    }
    return PowerSeries(dim_, std::max(0, trunc_ - n), std::move(m), exact_);
}

PowerSeries PowerSeries::antiderivative_z1() const {
    CoeffMap m;
    const MultiIndex e1 = MultiIndex::unit(dim_, 0);
    for (const auto& [alpha, c] : coef_)
        m.emplace(alpha.plus(e1), c / static_cast<double>(alpha[0] + 1));
    return PowerSeries(dim_, trunc_ + 1, std::move(m), exact_);
}

PowerSeries PowerSeries::padded(int truncation_degree) const {
    if (truncation_degree < trunc_)
        throw std::invalid_argument("padded: cannot lower the truncation degree");
    return PowerSeries(dim_, truncation_degree, coef_, exact_);
}

LogScaled PowerSeries::eval(std::span<const Coeff> z, std::optional<int> scale_degree) const {
    if (static_cast<int>(z.size()) != dim_)
        throw std::invalid_argument("eval: point dimension mismatch");
    if (coef_.empty()) return LogScaled::zero();

    std::vector<double> log_abs_z(z.size()), arg_z(z.size());
    double norm_sq = 0.0;
    for (size_t j = 0; j < z.size(); ++j) {
        log_abs_z[j] = z[j] == kZero ? kNegInf : std::log(std::abs(z[j]));
        arg_z[j] = std::arg(z[j]);
        norm_sq += std::norm(z[j]);
    }

    // first pass: per-term log magnitudes and phases
    std::vector<double> lm(coef_.size()), ph(coef_.size());
    size_t idx = 0;
    double max_lm = kNegInf;
    for (const auto& [alpha, c] : coef_) {
        double l = std::log(std::abs(c));
        double p = std::arg(c);
        for (int j = 0; j < dim_; ++j) {
            if (alpha[j] == 0) continue;
            if (log_abs_z[static_cast<size_t>(j)] == kNegInf) { l = kNegInf; break; }
            l += alpha[j] * log_abs_z[static_cast<size_t>(j)];
            p += alpha[j] * arg_z[static_cast<size_t>(j)];
        }
        lm[idx] = l;
        ph[idx] = p;
        max_lm = std::max(max_lm, l);
        ++idx;
    }
    if (max_lm == kNegInf) return LogScaled::zero();

    // Accumulation scale: the dominant term, or |z|^k when requested and not
    // hopelessly far from the dominant term.
    double scale = max_lm;
    if (scale_degree) {
        const double cand = 0.5 * (*scale_degree) * std::log(norm_sq);
        if (max_lm - cand < 700.0) scale = cand;
    }

    // second pass: compensated (Kahan) accumulation, degree order; terms more
    // than 45 decades below the dominant one cannot move a double accumulator
    const double cutoff = max_lm - 105.0;
    std::complex<double> sum{0.0, 0.0}, comp{0.0, 0.0};
    for (size_t i = 0; i < lm.size(); ++i) {
        if (lm[i] < cutoff) continue;
        const std::complex<double> term = std::polar(std::exp(lm[i] - scale), ph[i]);
        const std::complex<double> y = term - comp;
        const std::complex<double> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    if (sum == kZero) return LogScaled::zero();
    return LogScaled{sum, scale}.normalized();
}

bool PowerSeries::trusted_at(double r, int margin) const {
    if (exact_) return true;
    if (coef_.empty()) return true;
    if (r <= 0.0) return true;

    const double logr = std::log(r);
    // central index: largest degree attaining the max term
    double best = kNegInf;
    for (size_t k = 0; k < log_norms_.size(); ++k)
        if (log_norms_[k] != kNegInf)
            best = std::max(best, log_norms_[k] + static_cast<double>(k) * logr);
    int nu = 0;
    const double tol = 1e-12 * std::max(1.0, std::abs(best));
    for (size_t k = 0; k < log_norms_.size(); ++k)
        if (log_norms_[k] != kNegInf &&
            log_norms_[k] + static_cast<double>(k) * logr >= best - tol)
            nu = static_cast<int>(k);

    if (nu > trunc_ - margin) return false;

    // tail decay: terms over the last `margin` degrees must fall by at least
    // a factor 2 across the window, proportionally per degree
    const int lo = std::max(0, trunc_ - margin);
    const double rate = -std::log(2.0) / static_cast<double>(margin);
    int prev = -1;
    for (int k = lo; k <= trunc_; ++k) {
        if (log_norms_[static_cast<size_t>(k)] == kNegInf) continue;
        if (prev >= 0) {
            const double tp = log_norms_[static_cast<size_t>(prev)] + prev * logr;
            const double tk = log_norms_[static_cast<size_t>(k)] + k * logr;
            if (tk - tp > rate * (k - prev)) return false;
        }
        prev = k;
    }
    return true;
}

PowerSeries exp_series(const PowerSeries& g) {
    const int m = g.dimension();
    const int D = g.truncation_degree();

    // homogeneous strata of g
    std::vector<PowerSeries::CoeffMap> gs(static_cast<size_t>(D) + 1);
    for (const auto& [alpha, c] : g.coefficients())
        gs[static_cast<size_t>(alpha.degree())].emplace(alpha, c);

    const std::complex<double> h0 = std::exp(g.coefficient(MultiIndex::zeros(m)));

    std::vector<PowerSeries::CoeffMap> hs(static_cast<size_t>(D) + 1);
    hs[0].emplace(MultiIndex::zeros(m), h0);

    // k h_k = sum_{j=1..k} j g_j h_{k-j}  (Euler operator identity for h = exp g)
    for (int k = 1; k <= D; ++k) {
        PowerSeries::CoeffMap acc;
        for (int j = 1; j <= k; ++j) {
            if (gs[static_cast<size_t>(j)].empty()) continue;
            for (const auto& [a, ca] : gs[static_cast<size_t>(j)]) {
                for (const auto& [b, cb] : hs[static_cast<size_t>(k - j)]) {
                    const MultiIndex s = a.plus(b);
                    const std::complex<double> v =
                        static_cast<double>(j) * ca * cb / static_cast<double>(k);
                    auto [it, inserted] = acc.emplace(s, v);
                    if (!inserted) it->second += v;
                }
            }
        }
        hs[static_cast<size_t>(k)] = std::move(acc);
    }

    PowerSeries::CoeffMap out;
    for (auto& stratum : hs)
        for (auto& [alpha, c] : stratum)
            if (c != kZero) out.emplace(alpha, c);
    return PowerSeries(m, D, std::move(out), /*exact=*/false);
}

}  // namespace mvg
