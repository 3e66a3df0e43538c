#include "mvgrowth/families.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "mvgrowth/multi_index.hpp"
#include "mvgrowth/pde.hpp"

namespace mvg {

namespace {

using nlohmann::json;

std::complex<double> parse_complex(const json& v, const char* what) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw std::invalid_argument(std::string("family parameter '") + what +
                                "' must be a number or [re, im] pair: " + v.dump());
}

int get_int(const json& p, const char* key, int fallback) {
    if (!p.contains(key)) return fallback;
    if (!p[key].is_number_integer())
        throw std::invalid_argument(std::string("family parameter '") + key +
                                    "' must be an integer: " + p[key].dump());
    return p[key].get<int>();
}

/// (1 + z_1 + ... + z_m)^d via multinomial coefficients; exact polynomial.
PowerSeries dense_polynomial(int m, int d) {
    if (d < 0) throw std::invalid_argument("polynomial family: degree must be >= 0");
    std::vector<PowerSeries::Term> terms;
    std::vector<int> alpha(static_cast<size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == m) {
            // multinomial d! / (alpha! (d - |alpha|)!), an integer for d <= 20
            int total = 0;
            double lc = std::lgamma(static_cast<double>(d) + 1.0);
            for (int v : alpha) {
                lc -= std::lgamma(static_cast<double>(v) + 1.0);
                total += v;
            }
            lc -= std::lgamma(static_cast<double>(d - total) + 1.0);
            const double c = std::round(std::exp(lc));
            terms.emplace_back(MultiIndex(alpha), std::complex<double>(c, 0.0));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            alpha[static_cast<size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
        alpha[static_cast<size_t>(pos)] = 0;
    };
    rec(0, d);
    return PowerSeries::polynomial(m, terms);
}

std::vector<std::complex<double>> parse_linear_form(const json& p, int fallback_m) {
    std::vector<std::complex<double>> a;
    if (p.contains("a")) {
        if (!p["a"].is_array())
            throw std::invalid_argument("family parameter 'a' must be an array: " + p["a"].dump());
        for (const auto& v : p["a"]) a.push_back(parse_complex(v, "a"));
    } else {
        a.assign(static_cast<size_t>(get_int(p, "m", fallback_m)), {1.0, 0.0});
    }
    if (a.empty()) throw std::invalid_argument("family parameter 'a' must be non-empty");
    return a;
}

MultiIndex parse_index(const json& v, int m) {
    if (!v.is_array())
        throw std::invalid_argument("multi-index must be an array: " + v.dump());
    std::vector<int> e;
    for (const auto& x : v) {
        if (!x.is_number_integer() || x.get<int>() < 0)
            throw std::invalid_argument("multi-index entries must be non-negative integers: " +
                                        v.dump());
        e.push_back(x.get<int>());
    }
    if (static_cast<int>(e.size()) != m)
        throw std::invalid_argument("multi-index dimension mismatch: " + v.dump());
    return MultiIndex(e);
}

}  // namespace

PowerSeries parse_polynomial(int dimension, const json& terms) {
    if (!terms.is_array())
        throw std::invalid_argument("polynomial terms must be an array: " + terms.dump());
    std::vector<PowerSeries::Term> ts;
    for (const auto& t : terms) {
        if (!t.is_object() || !t.contains("index"))
            throw std::invalid_argument("polynomial term needs an 'index' field: " + t.dump());
        const MultiIndex alpha = parse_index(t["index"], dimension);
        const double re = t.value("re", 0.0);
        const double im = t.value("im", 0.0);
        ts.emplace_back(alpha, std::complex<double>(re, im));
    }
    return PowerSeries::polynomial(dimension, ts);
}

std::vector<FamilyInfo> list_families() {
    return {
        {"polynomial",
         "dense polynomial (1 + z_1 + ... + z_m)^degree, or explicit terms",
         R"({"m": int=2, "degree": int=5, "terms"?: [{"index": [..], "re": num, "im"?: num}]})"},
        {"exp_linear", "exp(a_1 z_1 + ... + a_m z_m), truncated at degree D",
         R"({"a": [num | [re,im], ...]=[1,..,1], "m": int=2, "D": int=60})"},
        {"exp_poly", "exp(g) for a polynomial g (default z_1^2 + z_2^2), truncated at D",
         R"({"m": int=2, "D": int=60, "g"?: [{"index": [..], "re": num, "im"?: num}]})"},
        {"exp_exp_linear", "exp(exp(a_1 z_1 + ... + a_m z_m) - 1), truncated at D",
         R"({"a": [num | [re,im], ...]=[1,..,1], "m": int=2, "D": int=80})"},
        {"pde_solution",
         "series solution of d f/d z_1 - e^P f = Q with initial stratum 1",
         R"({"m": int=2, "D": int=100, "P": [terms...], "Q"?: [terms...]})"},
    };
}

PowerSeries make_family(const std::string& name, const json& params) {
    const json p = params.is_null() ? json::object() : params;
    if (!p.is_object())
        throw std::invalid_argument("family parameters must be a JSON object: " + p.dump());

    if (name == "polynomial") {
        const int m = get_int(p, "m", 2);
        if (p.contains("terms")) return parse_polynomial(m, p["terms"]);
        return dense_polynomial(m, get_int(p, "degree", 5));
    }
    if (name == "exp_linear") {
        const auto a = parse_linear_form(p, 2);
        return PowerSeries::exp_of_linear(a, get_int(p, "D", 60));
    }
    if (name == "exp_poly") {
        const int m = get_int(p, "m", 2);
        const int D = get_int(p, "D", 60);
        PowerSeries g = [&] {
            if (p.contains("g")) return parse_polynomial(m, p["g"]);
            // default: z_1^2 + ... + z_m^2
            std::vector<PowerSeries::Term> ts;
            for (int j = 0; j < m; ++j) {
                const MultiIndex e = MultiIndex::unit(m, j);
                ts.emplace_back(e.plus(e), std::complex<double>(1.0, 0.0));
            }
            return PowerSeries::polynomial(m, ts);
        }();
        if (g.truncation_degree() > D)
            throw std::invalid_argument("exp_poly: D must be >= deg g");
        return exp_series(g.padded(D));
    }
    if (name == "exp_exp_linear") {
        const auto a = parse_linear_form(p, 2);
        const int D = get_int(p, "D", 80);
        const PowerSeries inner =
            PowerSeries::exp_of_linear(a, D).add(PowerSeries::constant(
                static_cast<int>(a.size()), {-1.0, 0.0}));
        return exp_series(inner);
    }
    if (name == "pde_solution") {
        const int m = get_int(p, "m", 2);
        const int D = get_int(p, "D", 100);
        if (!p.contains("P"))
            throw std::invalid_argument("pde_solution: parameter 'P' (polynomial terms) required");
        const PowerSeries P = parse_polynomial(m, p["P"]);
        const PowerSeries Q =
            p.contains("Q") ? parse_polynomial(m, p["Q"]) : PowerSeries::zero(m);
        const PdeInstance inst = make_instance(MultiIndex::unit(m, 0), P, Q, D);
        return solve_first_order(inst);
    }
    throw std::invalid_argument("unknown family: " + name);
}

}  // namespace mvg
