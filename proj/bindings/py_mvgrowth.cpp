#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "mvgrowth/families.hpp"
#include "mvgrowth/growth.hpp"
#include "mvgrowth/harness.hpp"
#include "mvgrowth/logderiv.hpp"
#include "mvgrowth/pde.hpp"
#include "mvgrowth/power_series.hpp"
#include "mvgrowth/report.hpp"
#include "mvgrowth/sampling.hpp"
#include "mvgrowth/series_io.hpp"
#include "mvgrowth/wiman_valiron.hpp"

namespace py = pybind11;
using namespace mvg;

namespace {

nlohmann::json parse_json_arg(const std::string& text) {
    return text.empty() ? nlohmann::json::object() : nlohmann::json::parse(text);
}

MultiIndex index_from_list(const std::vector<int>& e) { return MultiIndex(e); }

py::dict profile_to_dict(const GrowthProfile& p) {
    py::dict d;
    d["r"] = p.r;
    d["log_max_term"] = p.log_max_term;
    d["central_index"] = p.central_index;
    d["log_M_sphere"] = p.log_M_sphere;
    d["log_M_torus"] = p.log_M_torus;
    d["proximity"] = p.proximity;
    d["proximity_stderr"] = p.proximity_stderr;
    d["valence"] = p.valence;
    d["trusted"] = p.trusted;
    return d;
}

py::dict report_to_dict(const InequalityReport& rep) {
    py::dict d;
    d["theorem"] = rep.theorem;
    d["all_satisfied"] = rep.all_satisfied();
    d["empirical_constant"] = rep.empirical_constant;
    d["violating_radii"] = rep.violating_radii;
    d["violation_log_measure"] = rep.violation_log_measure;
    d["grid_log_length"] = rep.grid_log_length;
    py::list rows;
    for (const auto& row : rep.rows) {
        py::dict rd;
        rd["r"] = row.r;
        rd["lhs_log"] = row.lhs_log;
        rd["rhs_log"] = row.rhs_log;
        rd["satisfied"] = row.satisfied;
        rows.append(rd);
    }
    d["rows"] = rows;
    return d;
}

}  // namespace

PYBIND11_MODULE(_mvgrowth, mod) {
    mod.doc() = "growth functionals and theorem checks for entire functions on C^m";

    py::register_exception<ConfigError>(mod, "ConfigError");

    py::class_<MultiIndex>(mod, "MultiIndex")
        .def(py::init(&index_from_list))
        .def("degree", &MultiIndex::degree)
        .def("dimension", &MultiIndex::dimension)
        .def("__repr__", &MultiIndex::to_string);

    py::class_<PowerSeries>(mod, "PowerSeries")
        .def_static("polynomial",
                    [](int m, const std::vector<std::pair<std::vector<int>,
                                                          std::complex<double>>>& terms) {
                        std::vector<PowerSeries::Term> ts;
                        for (const auto& [e, c] : terms) ts.emplace_back(MultiIndex(e), c);
                        return PowerSeries::polynomial(m, ts);
                    })
        .def_static("exp_of_linear", &PowerSeries::exp_of_linear)
        .def_static("constant", &PowerSeries::constant)
        .def("dimension", &PowerSeries::dimension)
        .def("truncation_degree", &PowerSeries::truncation_degree)
        .def("exact", &PowerSeries::exact)
        .def("is_zero", &PowerSeries::is_zero)
        .def("coefficient",
             [](const PowerSeries& s, const std::vector<int>& e) {
                 return s.coefficient(MultiIndex(e));
             })
        .def("add", &PowerSeries::add)
        .def("mul", &PowerSeries::mul)
        .def("scale", &PowerSeries::scale)
        .def("derivative",
             [](const PowerSeries& s, const std::vector<int>& e) {
                 return s.derivative(MultiIndex(e));
             })
        .def("antiderivative_z1", &PowerSeries::antiderivative_z1)
        .def("padded", &PowerSeries::padded)
        .def("homogeneous_l1_norms",
             [](const PowerSeries& s) { return s.homogeneous_l1_norms().values; })
        .def("eval",
             [](const PowerSeries& s, const Point& z) {
                 const LogScaled v = s.eval(z);
                 return py::make_tuple(v.mantissa, v.log_scale);
             },
             "f(z) as (mantissa, log_scale) with f(z) = mantissa * exp(log_scale)")
        .def("eval_value",
             [](const PowerSeries& s, const Point& z) { return s.eval_value(z); })
        .def("log_abs",
             [](const PowerSeries& s, const Point& z) { return s.eval(z).log_abs(); })
        .def("trusted_at", &PowerSeries::trusted_at, py::arg("r"), py::arg("margin") = 10);

    mod.def("exp_series", &exp_series);
    mod.def("write_series_file", &write_series_file);
    mod.def("read_series_file", &read_series_file);

    mod.def("list_families", [] {
        py::list out;
        for (const auto& info : list_families()) {
            py::dict d;
            d["name"] = info.name;
            d["description"] = info.description;
            d["schema"] = info.schema;
            out.append(d);
        }
        return out;
    });
    mod.def("make_family", [](const std::string& name, const std::string& params_json) {
        return make_family(name, parse_json_arg(params_json));
    }, py::arg("name"), py::arg("params_json") = "");

    py::class_<RadiusGrid>(mod, "RadiusGrid")
        .def(py::init([](double r0, double ratio, int count) {
                 return RadiusGrid{r0, ratio, count};
             }),
             py::arg("r0"), py::arg("ratio"), py::arg("count"))
        .def("radii", &RadiusGrid::radii)
        .def("log_length", &RadiusGrid::log_length);

    mod.def("log_max_term",
            [](const PowerSeries& f, double r) { return log_max_term(f, r); });
    mod.def("central_index",
            [](const PowerSeries& f, double r) { return central_index(f, r); });
    mod.def("max_modulus_sphere",
            [](const PowerSeries& f, double r, int restarts, uint64_t seed) {
                const ModulusMax m = max_modulus_sphere(f, r, restarts, seed);
                return py::make_tuple(m.log_magnitude, m.argmax);
            },
            py::arg("f"), py::arg("r"), py::arg("restarts") = 8, py::arg("seed") = 1);
    mod.def("max_modulus_torus",
            [](const PowerSeries& f, double r, int restarts, uint64_t seed) {
                const TorusModulusMax m = max_modulus_torus(f, r, restarts, seed);
                return py::make_tuple(m.log_magnitude, m.argmax.phases);
            },
            py::arg("f"), py::arg("r"), py::arg("restarts") = 8, py::arg("seed") = 1);
    mod.def("proximity",
            [](const PowerSeries& f, double r, int count, uint64_t seed) {
                const MCEstimate e = proximity(log_abs_fn(f), f.dimension(), r, count, seed);
                return py::make_tuple(e.value, e.std_error);
            },
            py::arg("f"), py::arg("r"), py::arg("count") = 2000, py::arg("seed") = 1);
    mod.def("valence_jensen",
            [](const PowerSeries& f, double r, double r0, int count, uint64_t seed) {
                const MCEstimate e =
                    valence_jensen(log_abs_fn(f), f.dimension(), r, r0, count, seed);
                return py::make_tuple(e.value, e.std_error);
            },
            py::arg("f"), py::arg("r"), py::arg("r0") = 1.25, py::arg("count") = 2000,
            py::arg("seed") = 1);

    mod.def("compute_profiles",
            [](const PowerSeries& f, const RadiusGrid& grid, int samples, int restarts,
               uint64_t seed, int jobs) {
                ProfileOptions opt;
                opt.samples = samples;
                opt.restarts = restarts;
                opt.seed = seed;
                opt.jobs = jobs;
                py::list out;
                for (const auto& p : compute_profiles(f, grid, opt))
                    out.append(profile_to_dict(p));
                return out;
            },
            py::arg("f"), py::arg("grid"), py::arg("samples") = 2000, py::arg("restarts") = 8,
            py::arg("seed") = 1, py::arg("jobs") = 1);

    mod.def("verify_theorem21",
            [](const PowerSeries& f, const std::vector<int>& I, const std::vector<int>& In,
               double alpha, const RadiusGrid& grid, uint64_t seed) {
                LogderivOptions opt;
                opt.seed = seed;
                return report_to_dict(
                    verify_theorem21(f, MultiIndex(I), MultiIndex(In), alpha, grid, opt));
            },
            py::arg("f"), py::arg("I"), py::arg("In"), py::arg("alpha"), py::arg("grid"),
            py::arg("seed") = 1);
    mod.def("verify_t31",
            [](const PowerSeries& f, const RadiusGrid& grid, uint64_t seed) {
                WVOptions opt;
                opt.seed = seed;
                const ThresholdReport rep = verify_t31(f, grid, opt);
                py::dict d = report_to_dict(rep.report);
                d["threshold_radius"] = rep.threshold_radius;
                d["passes_above_threshold"] = rep.passes_above_threshold;
                return d;
            },
            py::arg("f"), py::arg("grid"), py::arg("seed") = 1);
    mod.def("verify_t32",
            [](const PowerSeries& f, const RadiusGrid& grid, uint64_t seed) {
                WVOptions opt;
                opt.seed = seed;
                return report_to_dict(verify_t32(f, grid, opt));
            },
            py::arg("f"), py::arg("grid"), py::arg("seed") = 1);

    mod.def("solve_first_order",
            [](const std::vector<int>& I, const PowerSeries& P, const PowerSeries& Q, int D) {
                return solve_first_order(make_instance(MultiIndex(I), P, Q, D));
            });
    mod.def("pde_residual",
            [](const std::vector<int>& I, const PowerSeries& P, const PowerSeries& Q, int D,
               const PowerSeries& f, const std::vector<Point>& points) {
                return residual(make_instance(MultiIndex(I), P, Q, D), f, points);
            });

    mod.def("run_experiment", [](const std::string& config_json) {
        return run_experiment(parse_config(nlohmann::json::parse(config_json)));
    });
    mod.def("run_experiment_file",
            [](const std::string& path) { return run_experiment(parse_config_file(path)); });
}
