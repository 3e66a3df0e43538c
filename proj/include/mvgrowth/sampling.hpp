#ifndef MVGROWTH_SAMPLING_HPP
#define MVGROWTH_SAMPLING_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "mvgrowth/power_series.hpp"
#include "mvgrowth/rng.hpp"

namespace mvg {

using Point = std::vector<std::complex<double>>;

/// I.i.d. points on the Euclidean sphere ||z|| = r under the unitarily
/// invariant probability measure (complex Gaussian direction, normalized).
struct SphereSample {
    std::vector<Point> points;
    double radius = 0.0;
    uint64_t seed = 0;
};

SphereSample sample_sigma(int m, double r, int count, uint64_t seed);

/// Single sigma-distributed point from an explicit generator state.
Point sigma_point(int m, double r, std::mt19937_64& rng);

/// Point on the distinguished torus {|z_j| = r}; Euclidean norm sqrt(m) r.
struct TorusPoint {
    std::vector<double> phases;  // in [0, 2pi)
    double radius = 0.0;

    Point embed() const;
};

struct ModulusMax {
    double log_magnitude = 0.0;
    Point argmax;
};

struct TorusModulusMax {
    double log_magnitude = 0.0;
    TorusPoint argmax;
};

/// Multi-start pattern search for max log|f| on the Euclidean sphere of
/// radius r. Throws std::domain_error on an untrusted radius unless
/// allow_untrusted. Best value is non-decreasing in restarts for a fixed seed.
ModulusMax max_modulus_sphere(const PowerSeries& f, double r, int restarts, uint64_t seed,
                              bool allow_untrusted = false);

/// Same search over torus phases only (radius fixed per coordinate).
TorusModulusMax max_modulus_torus(const PowerSeries& f, double r, int restarts, uint64_t seed,
                                  bool allow_untrusted = false);

}  // namespace mvg

#endif
