#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "mvgrowth/logderiv.hpp"
#include "mvgrowth/sampling.hpp"

using namespace mvg;
using C = std::complex<double>;

TEST_CASE("logderiv_ratio of exp(a1 z1 + a2 z2) is the constant a^I") {
    const C a1(1.0, 0.0), a2(2.0, -1.0);
    const auto f = PowerSeries::exp_of_linear({a1, a2}, 40);
    const Point z = {C(0.4, 0.1), C(-0.2, 0.3)};
    const auto r10 = logderiv_ratio(f, MultiIndex{0, 0}, MultiIndex{1, 0}, z);
    CHECK(std::abs(r10.value() - a1) <= 1e-10);
    const auto r01 = logderiv_ratio(f, MultiIndex{0, 0}, MultiIndex{0, 1}, z);
    CHECK(std::abs(r01.value() - a2) <= 1e-10 * std::abs(a2));
    // second over first derivative: d^{(1,1)} f / d^{(1,0)} f = a2
    const auto r11 = logderiv_ratio(f, MultiIndex{1, 0}, MultiIndex{1, 1}, z);
    CHECK(std::abs(r11.value() - a2) <= 1e-10 * std::abs(a2));
}

TEST_CASE("logderiv_ratio rejects a vanishing denominator") {
    const auto f = PowerSeries::polynomial(2, {{MultiIndex{1, 0}, C(1.0, 0.0)}});
    const Point z = {C(0.0, 0.0), C(0.5, 0.0)};
    CHECK_THROWS_AS(logderiv_ratio(f, MultiIndex{0, 0}, MultiIndex{0, 1}, z),
                    std::domain_error);
    CHECK_THROWS_AS(logderiv_ratio(f, MultiIndex{1, 0}, MultiIndex{1, 0}, z),
                    std::invalid_argument);  // |I_n| must exceed |I|
}

TEST_CASE("identities (second and third order) hold to 1e-8 for test families") {
    const auto pts = sample_sigma(2, 0.8, 60, 77).points;

    const auto exp_lin = PowerSeries::exp_of_linear({C(1.0, 0.0), C(0.5, 0.5)}, 30);
    const auto c1 = verify_logderiv_identities(exp_lin, MultiIndex{0, 0}, pts);
    CHECK(c1.passed);
    CHECK(c1.max_rel_discrepancy_2nd <= 1e-8);
    CHECK(c1.max_rel_discrepancy_3rd <= 1e-8);

    const auto poly = PowerSeries::polynomial(2, {{MultiIndex{0, 0}, C(3.0, 0.0)},
                                                  {MultiIndex{1, 0}, C(1.0, 0.0)},
                                                  {MultiIndex{1, 1}, C(0.5, 0.25)},
                                                  {MultiIndex{0, 2}, C(-0.25, 0.0)}});
    const auto c2 = verify_logderiv_identities(poly, MultiIndex{0, 0}, pts);
    CHECK(c2.passed);

    // with a nontrivial base derivative I
    const auto c3 = verify_logderiv_identities(exp_lin, MultiIndex{1, 0}, pts);
    CHECK(c3.passed);
}

TEST_CASE("theorem 2.1: empirical constant stays bounded for exp(z1+z2)") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 100);
    const RadiusGrid grid{1.5, 1.25, 10};  // alpha^3 r up to ~ 35
    LogderivOptions opt;
    opt.samples = 400;
    opt.seed = 5;
    const auto rep = verify_theorem21(f, MultiIndex{0, 0}, MultiIndex{1, 0}, 1.3, grid, opt);
    REQUIRE(rep.rows.size() >= 8);
    CHECK(rep.all_satisfied());

    // trailing-half max of B <= 10x trailing-half median
    std::vector<double> b;
    for (const auto& row : rep.rows) b.push_back(std::exp(row.lhs_log - row.rhs_log));
    std::vector<double> tail(b.begin() + static_cast<long>(b.size() / 2), b.end());
    std::sort(tail.begin(), tail.end());
    const double med = tail[tail.size() / 2];
    CHECK(tail.back() <= 10.0 * med);
}

TEST_CASE("corollary 2.1 with eps = 0.5 holds for exp(z1+z2)") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 120);
    const RadiusGrid grid{2.0, 1.25, 14};
    LogderivOptions opt;
    opt.samples = 200;
    opt.seed = 6;
    const auto rep = verify_corollary21(f, MultiIndex{0, 0}, MultiIndex{1, 0}, 0.5, grid, opt);
    REQUIRE_FALSE(rep.rows.empty());
    // [DERIVED] LHS = |a1| = 1, RHS ~ r^{0.5}: satisfied at every radius > 1
    CHECK(rep.all_satisfied());
}

TEST_CASE("lemma 2.4 counting bound for exp(z1+z2)") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 100);
    const RadiusGrid grid{2.0, 1.3, 8};
    LogderivOptions opt;
    opt.samples = 500;
    opt.seed = 8;
    const auto rep = verify_lemma24(f, MultiIndex{1, 0}, 2.0, grid, opt);
    REQUIRE_FALSE(rep.rows.empty());
    // [DERIVED] n = 0 (zero-free), RHS ~ 4/log 2 * T > 0: every radius passes
    CHECK(rep.all_satisfied());
}

TEST_CASE("theorem 2.1 rejects bad arguments") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 40);
    const RadiusGrid grid{1.5, 1.2, 6};
    LogderivOptions opt;
    CHECK_THROWS_AS(
        verify_theorem21(f, MultiIndex{0, 0}, MultiIndex{1, 0}, 1.0, grid, opt),
        std::invalid_argument);
    CHECK_THROWS_AS(
        verify_theorem21(f, MultiIndex{1, 0}, MultiIndex{1, 0}, 1.5, grid, opt),
        std::invalid_argument);
}
