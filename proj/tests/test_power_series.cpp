#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "mvgrowth/multi_index.hpp"
#include "mvgrowth/power_series.hpp"

using namespace mvg;
using C = std::complex<double>;

TEST_CASE("multi-index ordering and arithmetic") {
    CHECK(MultiIndex({1, 2}).degree() == 3);
    CHECK(MultiIndex({0, 3}) < MultiIndex({1, 3}));          // same degree, lex
    CHECK(MultiIndex({5, 0}) < MultiIndex({0, 6}));          // degree first
    CHECK(MultiIndex({2, 1}).plus(MultiIndex({0, 3})) == MultiIndex({2, 4}));
    CHECK(MultiIndex({2, 1}).dominates(MultiIndex({2, 0})));
    CHECK_FALSE(MultiIndex({2, 1}).dominates(MultiIndex({0, 2})));
    CHECK_THROWS_AS(MultiIndex({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex({3, 0}).minus(MultiIndex({0, 1})), std::invalid_argument);
}

TEST_CASE("polynomial construction is canonical and exact") {
    const auto p = PowerSeries::polynomial(2, {{MultiIndex{1, 0}, C(2.0, 0.0)},
                                               {MultiIndex{0, 2}, C(0.0, 1.0)},
                                               {MultiIndex{1, 1}, C(0.0, 0.0)}});
    CHECK(p.exact());
    CHECK(p.truncation_degree() == 2);
    CHECK(p.coefficients().size() == 2);  // zero term erased
    CHECK(p.coefficient(MultiIndex{1, 0}) == C(2.0, 0.0));
    CHECK_THROWS_AS(PowerSeries::polynomial(2, {{MultiIndex{1, 0}, C(1.0, 0.0)},
                                                {MultiIndex{1, 0}, C(2.0, 0.0)}}),
                    std::invalid_argument);
}

TEST_CASE("homogeneous l1 norms of exp(z1+z2) are 2^k/k!") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 12);
    const auto& norms = f.homogeneous_l1_norms().values;
    // [DERIVED] sum over |alpha|=k of 1/alpha! = 2^k/k!
    CHECK(norms[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(norms[1] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(norms[5] == doctest::Approx(32.0 / 120.0).epsilon(1e-13));
    CHECK(norms[10] == doctest::Approx(1024.0 / 3628800.0).epsilon(1e-13));
}

TEST_CASE("add/mul/scale with linearity and convolution bound") {
    const auto a = PowerSeries::polynomial(2, {{MultiIndex{1, 0}, C(1.0, 0.0)},
                                               {MultiIndex{0, 1}, C(2.0, 0.0)}});
    const auto b = PowerSeries::polynomial(2, {{MultiIndex{0, 0}, C(1.0, 0.0)},
                                               {MultiIndex{1, 1}, C(-1.0, 0.0)}});
    const auto sum = a.add(b);
    CHECK(sum.coefficient(MultiIndex{1, 0}) == C(1.0, 0.0));
    CHECK(sum.coefficient(MultiIndex{0, 0}) == C(1.0, 0.0));

    // product with enough padding is exact: (z1 + 2 z2)(1 - z1 z2)
    const auto prod = a.padded(3).mul(b.padded(3).padded(3));
    CHECK(prod.truncation_degree() == 3);
    CHECK(prod.coefficient(MultiIndex{1, 0}) == C(1.0, 0.0));
    CHECK(prod.coefficient(MultiIndex{2, 1}) == C(-1.0, 0.0));
    CHECK(prod.coefficient(MultiIndex{1, 2}) == C(-2.0, 0.0));

    // ||(fg)_k||_1 <= sum_j ||f_j||_1 ||g_{k-j}||_1
    const auto& na = a.homogeneous_l1_norms().values;
    const auto& nb = b.homogeneous_l1_norms().values;
    const auto& np = prod.homogeneous_l1_norms().values;
    for (size_t k = 0; k < np.size(); ++k) {
        double bound = 0.0;
        for (size_t j = 0; j < na.size() && j <= k; ++j)
            if (k - j < nb.size()) bound += na[j] * nb[k - j];
        CHECK(np[k] <= bound + 1e-13);
    }

    const auto s = a.scale(C(0.0, 3.0));
    CHECK(s.coefficient(MultiIndex{0, 1}) == C(0.0, 6.0));
}

TEST_CASE("mul truncates to the smaller degree and tracks exactness") {
    const auto a = PowerSeries::polynomial(2, {{MultiIndex{1, 0}, C(1.0, 0.0)}});
    const auto b = PowerSeries::polynomial(2, {{MultiIndex{0, 1}, C(1.0, 0.0)}});
    const auto cut = a.mul(b);  // both truncation degree 1 -> product cut at 1
    CHECK(cut.truncation_degree() == 1);
    CHECK(cut.is_zero());
    CHECK_FALSE(cut.exact());
    const auto ok = a.padded(2).mul(b.padded(2));
    CHECK(ok.exact());
    CHECK(ok.coefficient(MultiIndex{1, 1}) == C(1.0, 0.0));
}

TEST_CASE("derivative: closed form, commutation, linearity") {
    // [DERIVED] d^2/dz1^2 of z1^4 z2 = 12 z1^2 z2
    const auto f = PowerSeries::polynomial(2, {{MultiIndex{4, 1}, C(1.0, 0.0)}});
    const auto d = f.derivative(MultiIndex{2, 0});
    CHECK(d.coefficient(MultiIndex{2, 1}) == C(12.0, 0.0));

    const auto g = PowerSeries::exp_of_linear({C(1.0, 0.0), C(0.5, 0.5)}, 10);
    const auto d12 = g.derivative(MultiIndex{1, 0}).derivative(MultiIndex{0, 1});
    const auto d21 = g.derivative(MultiIndex{0, 1}).derivative(MultiIndex{1, 0});
    const auto dj = g.derivative(MultiIndex{1, 1});
    for (const auto& [alpha, c] : dj.coefficients()) {
        CHECK(std::abs(d12.coefficient(alpha) - c) <= 1e-15 * std::abs(c));
        CHECK(std::abs(d21.coefficient(alpha) - c) <= 1e-15 * std::abs(c));
    }
}

TEST_CASE("derivative of exp(a z) multiplies by a") {
    const C a(2.0, -1.0);
    const auto f = PowerSeries::exp_of_linear({a, C(1.0, 0.0)}, 15);
    const auto d = f.derivative(MultiIndex{1, 0});
    for (const auto& [alpha, c] : d.coefficients()) {
        if (alpha.degree() >= 15) continue;  // top stratum lost to truncation
        const C expect = a * f.coefficient(alpha);
        CHECK(std::abs(c - expect) <= 1e-12 * std::abs(expect));
    }
}

TEST_CASE("antiderivative_z1 inverts d/dz1") {
    const auto f = PowerSeries::polynomial(2, {{MultiIndex{2, 1}, C(3.0, 1.0)},
                                               {MultiIndex{0, 2}, C(1.0, 0.0)}});
    const auto back = f.antiderivative_z1().derivative(MultiIndex{1, 0});
    for (const auto& [alpha, c] : f.coefficients())
        CHECK(std::abs(back.coefficient(alpha) - c) <= 1e-15 * std::abs(c));
}

TEST_CASE("eval matches the closed form exp(z1+z2) at moderate points") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 60);
    const std::vector<C> z = {C(0.3, 0.0), C(0.2, 0.1)};
    const C expect = std::exp(C(0.5, 0.1));
    const C got = f.eval_value(z);
    CHECK(std::abs(got - expect) <= 1e-12 * std::abs(expect));
}

TEST_CASE("eval in split magnitude survives log|f| ~ 100") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 120);
    const std::vector<C> z = {C(50.0, 0.0), C(0.0, 0.0)};
    // [DERIVED] log|exp(z1+z2)| = 50; truncation tail < e^{-25} relative
    CHECK(f.trusted_at(50.0));
    CHECK(f.eval(z).log_abs() == doctest::Approx(50.0).epsilon(1e-12));
    // maximum-term recentred accumulation agrees
    CHECK(f.eval(z, 100).log_abs() == doctest::Approx(50.0).epsilon(1e-12));
}

TEST_CASE("eval scaling invariance: f(c z) of exp vs exp of scaled form") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(2.0, 0.0)}, 40);
    const auto g = PowerSeries::exp_of_linear({C(0.5, 0.0), C(1.0, 0.0)}, 40);
    const std::vector<C> z = {C(0.4, 0.2), C(-0.3, 0.1)};
    const std::vector<C> hz = {C(0.2, 0.1), C(-0.15, 0.05)};
    CHECK(std::abs(f.eval_value(hz) - g.eval_value(z)) <= 1e-12);
}

TEST_CASE("trust rule: exact series everywhere, truncated series up to capacity") {
    const auto p = PowerSeries::polynomial(2, {{MultiIndex{5, 0}, C(1.0, 0.0)}});
    CHECK(p.trusted_at(1e9));

    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 40);
    CHECK(f.trusted_at(5.0));    // central index ~10 << 30
    CHECK_FALSE(f.trusted_at(25.0));  // central index ~50 > 40
    CHECK_FALSE(f.trusted_at(16.0));  // index ~32 > D - margin
}

TEST_CASE("exp_series matches exp_of_linear on a linear polynomial") {
    const int D = 25;
    const auto g = PowerSeries::polynomial(2, {{MultiIndex{1, 0}, C(1.0, 0.0)},
                                               {MultiIndex{0, 1}, C(0.5, -0.5)}})
                       .padded(D);
    const auto via_recurrence = exp_series(g);
    const auto closed = PowerSeries::exp_of_linear({C(1.0, 0.0), C(0.5, -0.5)}, D);
    for (const auto& [alpha, c] : closed.coefficients()) {
        const C got = via_recurrence.coefficient(alpha);
        CHECK(std::abs(got - c) <= 1e-12 * std::abs(c));
    }
}

TEST_CASE("exp_series respects exp(g+h) = exp(g) exp(h) for commuting strata") {
    const int D = 16;
    const auto g = PowerSeries::polynomial(2, {{MultiIndex{2, 0}, C(0.3, 0.0)}}).padded(D);
    const auto h = PowerSeries::polynomial(2, {{MultiIndex{0, 1}, C(0.0, 0.7)}}).padded(D);
    const auto lhs = exp_series(g.add(h));
    const auto rhs = exp_series(g).mul(exp_series(h));
    for (const auto& [alpha, c] : lhs.coefficients()) {
        const C got = rhs.coefficient(alpha);
        CHECK(std::abs(got - c) <= 1e-12 * std::max(1.0, std::abs(c)));
    }
}

TEST_CASE("padded keeps values and rejects shrinking") {
    const auto f = PowerSeries::exp_of_linear({C(1.0, 0.0), C(1.0, 0.0)}, 10);
    const auto p = f.padded(20);
    CHECK(p.truncation_degree() == 20);
    const std::vector<C> z = {C(0.1, 0.0), C(0.2, 0.0)};
    CHECK(std::abs(p.eval_value(z) - f.eval_value(z)) == 0.0);
    CHECK_THROWS_AS(f.padded(5), std::invalid_argument);
}
