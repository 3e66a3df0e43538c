#include "mvgrowth/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mvg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double log_abs_at(const PowerSeries& f, const Point& z) {
    return f.eval(z).log_abs();
}

void normalize_to(Point& z, double r) {
    double n = 0.0;
    for (const auto& v : z) n += std::norm(v);
    n = std::sqrt(n);
    if (n == 0.0) throw std::runtime_error("degenerate zero direction");
    const double s = r / n;
    for (auto& v : z) v *= s;
}

}  // namespace

Point sigma_point(int m, double r, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Point z(static_cast<size_t>(m));
    for (auto& v : z) v = {gauss(rng), gauss(rng)};
    normalize_to(z, r);
    return z;
}

SphereSample sample_sigma(int m, double r, int count, uint64_t seed) {
    if (m < 1 || r <= 0.0 || count < 1)
        throw std::invalid_argument("sample_sigma: need m >= 1, r > 0, count >= 1");
    auto rng = make_rng(seed);
    SphereSample s;
    s.radius = r;
    s.seed = seed;
    s.points.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) s.points.push_back(sigma_point(m, r, rng));
    return s;
}

Point TorusPoint::embed() const {
    Point z(phases.size());
    for (size_t j = 0; j < phases.size(); ++j) z[j] = std::polar(radius, phases[j]);
    return z;
}

ModulusMax max_modulus_sphere(const PowerSeries& f, double r, int restarts, uint64_t seed,
                              bool allow_untrusted) {
    if (!allow_untrusted && !f.trusted_at(r))
        throw std::domain_error("max_modulus_sphere: untrusted radius");
    if (restarts < 1) throw std::invalid_argument("max_modulus_sphere: restarts >= 1");
    const int m = f.dimension();

    ModulusMax best;
    best.log_magnitude = kNegInf;

    for (int t = 0; t < restarts; ++t) {
        auto rng = make_rng(seed, static_cast<uint64_t>(t));
        Point z = sigma_point(m, r, rng);
        double val = log_abs_at(f, z);
        // projected pattern search over the 2m real coordinates
        double step = 0.5;
        while (step >= 1e-6) {
            bool improved = false;
            for (int j = 0; j < m && !improved; ++j) {
                for (int part = 0; part < 2 && !improved; ++part) {
                    for (double sgn : {1.0, -1.0}) {
                        Point cand = z;
                        const std::complex<double> delta =
                            part == 0 ? std::complex<double>(sgn * step * r, 0.0)
                                      : std::complex<double>(0.0, sgn * step * r);
                        cand[static_cast<size_t>(j)] += delta;
                        normalize_to(cand, r);
                        const double cv = log_abs_at(f, cand);
                        if (cv > val) {
                            z = std::move(cand);
                            val = cv;
                            improved = true;
                            break;
                        }
                    }
                }
            }
            if (!improved) step *= 0.5;
        }
        if (val > best.log_magnitude) {
            best.log_magnitude = val;
            best.argmax = z;
        }
    }
    return best;
}

TorusModulusMax max_modulus_torus(const PowerSeries& f, double r, int restarts, uint64_t seed,
                                  bool allow_untrusted) {
    if (!allow_untrusted && !f.trusted_at(std::sqrt(static_cast<double>(f.dimension())) * r))
        throw std::domain_error("max_modulus_torus: untrusted radius");
    if (restarts < 1) throw std::invalid_argument("max_modulus_torus: restarts >= 1");
    const int m = f.dimension();

    TorusModulusMax best;
    best.log_magnitude = kNegInf;

    for (int t = 0; t < restarts; ++t) {
        auto rng = make_rng(seed, 0x7000000ULL + static_cast<uint64_t>(t));
        std::uniform_real_distribution<double> uni(0.0, kTwoPi);
        TorusPoint p;
        p.radius = r;
        p.phases.resize(static_cast<size_t>(m));
        for (auto& th : p.phases) th = uni(rng);
        double val = log_abs_at(f, p.embed());

        double step = 1.0;
        while (step >= 1e-6) {
            bool improved = false;
            for (size_t j = 0; j < p.phases.size() && !improved; ++j) {
                for (double sgn : {1.0, -1.0}) {
                    TorusPoint cand = p;
                    cand.phases[j] = std::fmod(cand.phases[j] + sgn * step + kTwoPi, kTwoPi);
                    const double cv = log_abs_at(f, cand.embed());
                    if (cv > val) {
                        p = std::move(cand);
                        val = cv;
                        improved = true;
                        break;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }
        if (val > best.log_magnitude) {
            best.log_magnitude = val;
            best.argmax = p;
        }
    }
    return best;
}

}  // namespace mvg
