#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "mvgrowth/pde.hpp"
#include "mvgrowth/sampling.hpp"

using namespace mvg;
using C = std::complex<double>;

namespace {

PowerSeries z1_poly(int m) {
    return PowerSeries::polynomial(m, {{MultiIndex::unit(m, 0), C(1.0, 0.0)}});
}

}  // namespace

TEST_CASE("instance validation") {
    const auto P = z1_poly(2);
    const auto Q = PowerSeries::zero(2);
    CHECK_NOTHROW(make_instance(MultiIndex{1, 0}, P, Q, 20));
    // constant P rejected
    const auto Pc = PowerSeries::constant(2, C(2.0, 0.0));
    CHECK_THROWS_AS(make_instance(MultiIndex{1, 0}, Pc, Q, 20), std::invalid_argument);
    // I must live on the first coordinate
    CHECK_THROWS_AS(make_instance(MultiIndex{0, 1}, P, Q, 20), std::invalid_argument);
    CHECK_THROWS_AS(make_instance(MultiIndex{0, 0}, P, Q, 20), std::invalid_argument);
    // D too small
    CHECK_THROWS_AS(make_instance(MultiIndex{1, 0}, P, Q, 2), std::invalid_argument);
    // truncated P is not a polynomial
    const auto Pt = PowerSeries::exp_of_linear({C(1.0, 0.0), C(0.0, 0.0)}, 6);
    CHECK_THROWS_AS(make_instance(MultiIndex{1, 0}, Pt, Q, 20), std::invalid_argument);
}

TEST_CASE("P = z1, Q = 0: recurrence matches exp(antiderivative(exp(P)))") {
    const int D = 40;
    const auto inst = make_instance(MultiIndex{1, 0}, z1_poly(2), PowerSeries::zero(2), D);
    const auto f = solve_first_order(inst);

    // independent route: f = exp(e^{z1} - 1) built by composition
    const auto expP = exp_series(z1_poly(2).padded(D - 1));
    const auto g = expP.antiderivative_z1();  // e^{z1}-1 integrated... antiderivative of e^{z1}
    const auto h = exp_series(g.padded(D).add(PowerSeries::zero(2, D)));
    for (const auto& [alpha, c] : h.coefficients()) {
        const C got = f.coefficient(alpha);
        CHECK(std::abs(got - c) <= 1e-12 * std::max(std::abs(c), 1e-30));
    }
    // [DERIVED] Taylor coefficients of exp(e^z - 1) are Bell numbers / k!:
    // B_0..B_5 = 1, 1, 2, 5, 15, 52
    CHECK(std::abs(f.coefficient(MultiIndex{0, 0}) - C(1.0, 0.0)) <= 1e-14);
    CHECK(std::abs(f.coefficient(MultiIndex{3, 0}) - C(5.0 / 6.0, 0.0)) <= 1e-13);
    CHECK(std::abs(f.coefficient(MultiIndex{5, 0}) - C(52.0 / 120.0, 0.0)) <= 1e-13);
}

TEST_CASE("residual of a constructed solution is tiny at ||z|| <= 1") {
    const int D = 40;
    const auto Q = PowerSeries::constant(2, C(1.0, 0.0));
    const auto inst = make_instance(MultiIndex{1, 0}, z1_poly(2), Q, D);
    const auto f = solve_first_order(inst);
    const auto pts = sample_sigma(2, 1.0, 20, 91).points;
    CHECK(residual(inst, f, pts) <= 1e-10);

    // sensitivity: a 1e-2 bump in one coefficient must be visible
    const auto bump = PowerSeries::polynomial(2, {{MultiIndex{3, 0}, C(1e-2, 0.0)}});
    const auto fb = f.add(bump.padded(D));
    CHECK(residual(inst, fb, pts) >= 1e-3);
}

TEST_CASE("tautological instances have residual zero by construction") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 30);
    const auto inst = tautological_instance(f, MultiIndex{2, 0}, z1_poly(2));
    const auto pts = sample_sigma(2, 0.8, 10, 17).points;
    CHECK(residual(inst, f, pts) <= 1e-10);
}

TEST_CASE("residual refuses points outside the trusted radius") {
    const auto inst =
        make_instance(MultiIndex{1, 0}, z1_poly(2), PowerSeries::zero(2), 20);
    const auto f = solve_first_order(inst);
    const std::vector<Point> far = {{C(30.0, 0.0), C(0.0, 0.0)}};
    CHECK_THROWS_AS(residual(inst, f, far), std::domain_error);
}

TEST_CASE("solver preconditions") {
    const auto inst2 =
        make_instance(MultiIndex{2, 0}, z1_poly(2), PowerSeries::zero(2), 20);
    CHECK_THROWS_AS(solve_first_order(inst2), std::invalid_argument);  // |I| = 2

    const auto inst1 =
        make_instance(MultiIndex{1, 0}, z1_poly(2), PowerSeries::zero(2), 20);
    const auto f0_bad = z1_poly(2);  // depends on z1
    CHECK_THROWS_AS(solve_first_order(inst1, f0_bad), std::invalid_argument);

    // custom initial stratum in z2 works and scales the solution strata
    const auto f0 = PowerSeries::polynomial(
        2, {{MultiIndex{0, 1}, C(1.0, 0.0)}, {MultiIndex{0, 0}, C(1.0, 0.0)}});
    const auto f = solve_first_order(inst1, f0);
    // [DERIVED] f = (1 + z2) exp(e^{z1} - 1): coefficient of z1 z2 equals 1
    CHECK(std::abs(f.coefficient(MultiIndex{1, 1}) - C(1.0, 0.0)) <= 1e-13);
}

TEST_CASE("smallness check: polynomial Q against a rapidly growing solution") {
    const int D = 80;
    const auto inst = make_instance(MultiIndex{1, 0}, z1_poly(2), PowerSeries::zero(2), D);
    const auto f = solve_first_order(inst);

    const RadiusGrid grid{1.5, 1.08, 10};
    SUBCASE("Q = 0 gives all-zero ratios") {
        const auto rep = smallness_check(f, PowerSeries::zero(2), grid, 200, 1);
        REQUIRE_FALSE(rep.ratios.empty());
        for (double v : rep.ratios) CHECK(v == 0.0);
        CHECK(rep.decreasing);
    }
    SUBCASE("Q = exp(z1) decays relative to f") {
        // [DERIVED] T(r, Q) grows ~ c r while T(r, f) grows superexponentially
        const auto Q = PowerSeries::exp_of_linear({C(1.0, 0.0), C(0.0, 0.0)}, 40);
        const auto rep = smallness_check(f, Q, grid, 400, 2);
        REQUIRE(rep.ratios.size() >= 8);
        CHECK(rep.decreasing);
        CHECK(rep.ratios.back() < rep.ratios.front());
    }
}

TEST_CASE("theorem 4.1 desk-scale for P = z1") {
    const int D = 120;
    const auto inst = make_instance(MultiIndex{1, 0}, z1_poly(2), PowerSeries::zero(2), D);
    const auto f = solve_first_order(inst);
    const RadiusGrid grid{1.5, 1.09, 9};  // r up to ~3.0
    T41Options opt;
    opt.samples = 200;
    opt.seed = 41;
    const auto rep = verify_t41(inst, f, grid, opt);
    CHECK(rep.deg_p == 1);
    CHECK(rep.residual_ok);
    CHECK(rep.smallness_ok);
    CHECK(rep.rho1_hat == doctest::Approx(1.0).epsilon(0.3));
    CHECK(rep.lower_bounded);
    CHECK(rep.upper_bounded);
    CHECK(rep.passed());
}
