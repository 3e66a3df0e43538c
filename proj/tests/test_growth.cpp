#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "mvgrowth/growth.hpp"

using namespace mvg;
using C = std::complex<double>;

TEST_CASE("proximity of a constant has the exact mean and zero spread") {
    for (int m : {1, 2, 3}) {
        const auto f = PowerSeries::constant(m, C(std::exp(1.0), 0.0));
        const auto e = proximity(log_abs_fn(f), m, 2.0, 200, 1);
        CHECK(e.value == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(e.std_error <= 1e-12);
    }
}

TEST_CASE("proximity of f = z1 in C^2 matches the closed form") {
    // [DERIVED] with x = |z1|^2/r^2 ~ U[0,1]:
    //   m(r) = E log+ (r sqrt(x)) = log r - 1/2 + 1/(2 r^2)  for r > 1
    const auto f = PowerSeries::polynomial(2, {{MultiIndex{1, 0}, C(1.0, 0.0)}});
    for (double r : {2.0, 4.0}) {
        const auto e = proximity(log_abs_fn(f), 2, r, 20000, 17);
        const double expect = std::log(r) - 0.5 + 1.0 / (2.0 * r * r);
        CHECK(std::abs(e.value - expect) <= 3.0 * e.std_error);
        CHECK(e.std_error < 0.02);
    }
}

TEST_CASE("paired-direction Jensen valence of z1 is log(r/r0) with ~zero noise") {
    const auto f = PowerSeries::polynomial(2, {{MultiIndex{1, 0}, C(1.0, 0.0)}});
    const auto e = valence_jensen(log_abs_fn(f), 2, 8.0, 1.25, 2000, 3);
    // [DERIVED] log|z1(r w)| - log|z1(r0 w)| = log(r/r0) for every direction w
    CHECK(e.value == doctest::Approx(std::log(8.0 / 1.25)).epsilon(1e-12));
    CHECK(e.std_error <= 1e-12);
}

TEST_CASE("counting function of z1 is 1") {
    const auto f = PowerSeries::polynomial(2, {{MultiIndex{1, 0}, C(1.0, 0.0)}});
    const auto e = counting_from_valence(log_abs_fn(f), 2, 2.0, 8.0, 2000, 5);
    CHECK(e.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zero-free functions have zero valence") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 60);
    const auto e = valence_jensen(log_abs_fn(f), 2, 6.0, 1.25, 2000, 9);
    // [DERIVED] Jensen difference E[Re(z1+z2)] over paired directions is 0
    CHECK(std::abs(e.value) <= 3.0 * e.std_error + 1e-9);
}

TEST_CASE("maximum term and central index closed forms for polynomials") {
    // p = 2 z1^3 z2^2 + z2: ||a_5||_1 = 2, ||a_1||_1 = 1
    const auto p = PowerSeries::polynomial(2, {{MultiIndex{3, 2}, C(2.0, 0.0)},
                                               {MultiIndex{0, 1}, C(1.0, 0.0)}});
    for (double r : {2.0, 10.0, 1e4}) {
        CHECK(log_max_term(p, r) == doctest::Approx(std::log(2.0) + 5.0 * std::log(r)));
        CHECK(central_index(p, r) == 5);
    }
}

TEST_CASE("central index of exp(z1+z2) tracks 2r") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 80);
    for (double r : {2.0, 5.0, 10.0, 20.0}) {
        REQUIRE(f.trusted_at(r));
        const int nu = central_index(f, r);
        const int target = static_cast<int>(std::floor(2.0 * r));
        CHECK(nu >= target - 1);
        CHECK(nu <= target + 1);
    }
}

TEST_CASE("ties in the maximum term resolve to the largest degree") {
    // z1 and z1^2 tie exactly at r = 1... use norms at r where terms equal:
    // ||a_1|| r = ||a_2|| r^2 at r = 2 for coefficients 1 and 1/2
    const auto p = PowerSeries::polynomial(2, {{MultiIndex{1, 0}, C(1.0, 0.0)},
                                               {MultiIndex{2, 0}, C(0.5, 0.0)}});
    CHECK(central_index(p, 2.0) == 2);
}

TEST_CASE("radius grid validation and log length") {
    CHECK_THROWS_AS((RadiusGrid{0.5, 1.2, 4}).radii(), std::invalid_argument);
    CHECK_THROWS_AS((RadiusGrid{2.0, 0.9, 4}).radii(), std::invalid_argument);
    const RadiusGrid g{2.0, 2.0, 5};
    const auto rs = g.radii();
    CHECK(rs.size() == 5);
    CHECK(rs.back() == doctest::Approx(32.0));
    CHECK(g.log_length() == doctest::Approx(4.0 * std::log(2.0)));
}

TEST_CASE("profiles + order estimate: exp(z1+z2) has order 1, three sources agree") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 120);
    const RadiusGrid grid{2.0, 1.25, 14};  // r up to ~36, trusted throughout
    ProfileOptions opt;
    opt.samples = 300;
    opt.restarts = 4;
    opt.seed = 21;
    const auto profiles = compute_profiles(f, grid, opt);
    REQUIRE(profiles.size() == 14);
    for (const auto& p : profiles) CHECK(p.trusted);

    const double via_mu = order_estimate(profiles, GrowthSource::max_term);
    const double via_nu = order_estimate(profiles, GrowthSource::central_index);
    const double via_M = order_estimate(profiles, GrowthSource::max_modulus);
    CHECK(via_mu == doctest::Approx(1.0).epsilon(0.2));
    CHECK(via_nu == doctest::Approx(1.0).epsilon(0.2));
    CHECK(via_M == doctest::Approx(1.0).epsilon(0.2));
}

TEST_CASE("profiles are deterministic and parallel-invariant") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 60);
    const RadiusGrid grid{2.0, 1.3, 8};
    ProfileOptions opt;
    opt.samples = 100;
    opt.restarts = 2;
    opt.seed = 4;
    const auto a = compute_profiles(f, grid, opt);
    opt.jobs = 4;
    const auto b = compute_profiles(f, grid, opt);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].log_M_sphere == b[i].log_M_sphere);
        CHECK(a[i].proximity == b[i].proximity);
        CHECK(a[i].valence == b[i].valence);
    }
}

TEST_CASE("order estimate refuses fewer than 8 trusted radii") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 60);
    std::vector<GrowthProfile> ps(5);
    for (size_t i = 0; i < ps.size(); ++i) {
        ps[i].r = 2.0 + static_cast<double>(i);
        ps[i].trusted = true;
        ps[i].central_index = static_cast<int>(2 * ps[i].r);
    }
    CHECK_THROWS_AS(order_estimate(ps, GrowthSource::central_index), std::domain_error);
}

TEST_CASE("hyper-order of exp(z1+z2) is far below 1 on desk grids") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 120);
    const RadiusGrid grid{2.0, 1.25, 14};
    ProfileOptions opt;
    opt.samples = 50;
    opt.restarts = 2;
    opt.seed = 2;
    const auto profiles = compute_profiles(f, grid, opt);
    // [DERIVED] log log mu ~ log(2r): one more log gives slope ~ 1/log(2r) ~ 0.25
    CHECK(hyper_order_estimate(profiles, GrowthSource::max_term) <= 0.45);
}
