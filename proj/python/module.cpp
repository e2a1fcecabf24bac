#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quantize1d/asymptotics.hpp"
#include "quantize1d/json_io.hpp"
#include "quantize1d/step_fit.hpp"
#include "quantize1d/unconstrained.hpp"

namespace py = pybind11;
using namespace q1d;

namespace {

StepApprox approx_from_lists(std::vector<double> x, std::vector<double> p) {
    return StepApprox(std::move(x), std::move(p));
}

py::dict approx_dict(const StepApprox& a) {
    py::dict d;
    d["x"] = a.x;
    d["p"] = a.p;
    d["P"] = a.cumulative();
    if (a.r) d["r"] = *a.r;
    if (a.achieved_distance) d["d_r"] = *a.achieved_distance;
    return d;
}

} // namespace

PYBIND11_MODULE(quantize1d, m) {
    m.doc() = "Best finitely supported approximations of one-dimensional probability "
              "measures in the L^r-Kantorovich distance";

    py::class_<Interval>(m, "Interval")
        .def_readonly("lo", &Interval::lo)
        .def_readonly("hi", &Interval::hi)
        .def("__repr__", [](const Interval& i) {
            return "Interval(" + format_real(i.lo) + ", " + format_real(i.hi) + ")";
        });

    py::class_<Measure>(m, "Measure")
        .def_static("point_mass", &Measure::point_mass, py::arg("a"))
        .def_static("uniform", &Measure::uniform, py::arg("a"), py::arg("b"))
        .def_static("exponential", &Measure::exponential)
        .def_static("standard_normal", &Measure::standard_normal)
        .def_static("beta_2_1", &Measure::beta_2_1)
        .def_static("discrete", &Measure::discrete, py::arg("atoms"), py::arg("weights"))
        .def_static("cantor", &Measure::cantor, py::arg("digit_depth") = 48)
        .def_static("inverse_cantor", &Measure::inverse_cantor, py::arg("digit_depth") = 48)
        .def_static("piecewise_linear_quantile", &Measure::piecewise_linear_quantile,
                    py::arg("knots"))
        .def_static(
            "lebesgue_plus_atoms",
            [](std::vector<std::vector<double>> intervals,
               std::vector<std::pair<double, double>> atoms) {
                std::vector<std::array<double, 3>> iv;
                for (auto& v : intervals) {
                    if (v.size() != 3)
                        throw std::invalid_argument("intervals must be (a, b, mass) triples");
                    iv.push_back({v[0], v[1], v[2]});
                }
                return Measure::lebesgue_plus_atoms(std::move(iv), std::move(atoms));
            },
            py::arg("intervals"), py::arg("atoms") = std::vector<std::pair<double, double>>{})
        .def_static("from_json", &measure_from_json, py::arg("text"))
        .def("to_json", &measure_to_json)
        .def("cdf", &Measure::cdf, py::arg("x"))
        .def("quantile", &Measure::quantile, py::arg("t"))
        .def("quantile_set_cdf", &Measure::quantile_set_cdf, py::arg("t"))
        .def("quantile_set_quantile", &Measure::quantile_set_quantile, py::arg("c"))
        .def("support_bounds", &Measure::support_bounds)
        .def("moment", &Measure::moment, py::arg("r"))
        .def("inverse_measure_density", &Measure::inverse_measure_density, py::arg("t"))
        .def("quantile_partial_integral", &Measure::quantile_partial_integral, py::arg("a"),
             py::arg("b"));

    py::class_<StepApprox>(m, "StepApprox")
        .def(py::init(&approx_from_lists), py::arg("x"), py::arg("p"))
        .def_readonly("x", &StepApprox::x)
        .def_readonly("p", &StepApprox::p)
        .def_property_readonly("P", &StepApprox::cumulative)
        .def_property_readonly(
            "d_r", [](const StepApprox& a) { return a.achieved_distance; })
        .def("as_dict", &approx_dict);

    py::class_<TauResult>(m, "TauResult")
        .def_readonly("r", &TauResult::r)
        .def_readonly("value", &TauResult::value)
        .def_readonly("minimizers", &TauResult::minimizers)
        .def_readonly("residual_norm", &TauResult::residual_norm);

    py::class_<PiecewiseFunction>(m, "PiecewiseFunction")
        .def_static(
            "step",
            [](const std::vector<double>& breaks, const std::vector<double>& levels) {
                return PiecewiseFunction::step(breaks, levels);
            },
            py::arg("breaks"), py::arg("levels"))
        .def_static("from_json", &piecewise_from_json, py::arg("text"))
        .def("__call__", &PiecewiseFunction::operator())
        .def("ell", &PiecewiseFunction::ell, py::arg("t"))
        .def("ell_inverse", &PiecewiseFunction::ell_inverse, py::arg("x"))
        .def("balanced_set", &PiecewiseFunction::balanced_set)
        .def("growth_points", &PiecewiseFunction::growth_points);

    m.def(
        "tau_r", [](const PiecewiseFunction& f, double r) { return tau_r(f, r); },
        py::arg("f"), py::arg("r"));
    m.def(
        "tau_one_plus", [](const PiecewiseFunction& f) { return tau_one_plus(f); },
        py::arg("f"));
    m.def(
        "tau_infinity", [](const PiecewiseFunction& f) { return tau_infinity(f); },
        py::arg("f"));

    m.def("distance_r", &distance_r, py::arg("mu"), py::arg("nu"), py::arg("r"));
    m.def("distance_r_discrete", &distance_r_discrete, py::arg("mu"), py::arg("nu"),
          py::arg("r"));

    py::enum_<Selector>(m, "Selector")
        .value("min_point", Selector::min_point)
        .value("max_point", Selector::max_point)
        .value("midpoint", Selector::midpoint);

    m.def("best_given_locations", &best_given_locations, py::arg("mu"), py::arg("x"),
          py::arg("r"), py::arg("selector") = Selector::max_point);
    m.def("best_given_weights", &best_given_weights, py::arg("mu"), py::arg("p"), py::arg("r"),
          py::arg("selector") = Selector::min_point);
    m.def("best_uniform", &best_uniform, py::arg("mu"), py::arg("n"), py::arg("r"),
          py::arg("selector") = Selector::min_point);

    py::enum_<OrderingMode>(m, "OrderingMode")
        .value("all_permutations", OrderingMode::all_permutations)
        .value("sorted_only", OrderingMode::sorted_only);
    m.def("best_weights_over_orderings", &best_weights_over_orderings, py::arg("mu"),
          py::arg("p"), py::arg("r"), py::arg("mode") = OrderingMode::all_permutations,
          py::arg("selector") = Selector::min_point);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("starts", &SolverConfig::starts)
        .def_readwrite("seed", &SolverConfig::seed)
        .def_readwrite("max_iterations", &SolverConfig::max_iterations)
        .def_readwrite("convergence_tol", &SolverConfig::convergence_tol);

    py::class_<FreeResult>(m, "FreeResult")
        .def_readonly("best", &FreeResult::best)
        .def_readonly("candidates", &FreeResult::candidates)
        .def_readonly("unconverged_starts", &FreeResult::unconverged_starts)
        .def_readonly("starts_converged", &FreeResult::starts_converged)
        .def_readonly("starts_total", &FreeResult::starts_total);

    m.def("lloyd_step", &lloyd_step, py::arg("mu"), py::arg("approx"), py::arg("r"),
          py::arg("selector") = Selector::max_point);
    m.def("best_free", &best_free, py::arg("mu"), py::arg("n"), py::arg("r"),
          py::arg("config") = SolverConfig{});
    m.def("brute_force_oracle", &brute_force_oracle, py::arg("mu"), py::arg("n"), py::arg("r"),
          py::arg("resolution"));

    m.def("th6_limit", &th6_limit, py::arg("mu"), py::arg("r"));
    m.def("zador_limit", &zador_limit, py::arg("mu"), py::arg("r"));
    m.def("asym_best_locations", &asym_best_locations, py::arg("mu"), py::arg("n"),
          py::arg("r"));
    m.def("slow_decay_measure", &slow_decay_measure, py::arg("target"), py::arg("r"),
          py::arg("K"));

    py::enum_<Regime>(m, "Regime")
        .value("uniform", Regime::uniform)
        .value("free", Regime::free)
        .value("locations_scheme", Regime::locations_scheme)
        .value("weights_scheme", Regime::weights_scheme)
        .value("asym_scheme", Regime::asym_scheme);

    py::class_<RateSeries>(m, "RateSeries")
        .def_readonly("n_values", &RateSeries::n_values)
        .def_readonly("d_values", &RateSeries::d_values)
        .def_readonly("r", &RateSeries::r)
        .def_readonly("fitted_exponent", &RateSeries::fitted_exponent)
        .def_readonly("fitted_constant", &RateSeries::fitted_constant)
        .def_readonly("fit_residual", &RateSeries::fit_residual)
        .def("to_csv", &RateSeries::to_csv);

    m.def(
        "rate_sweep",
        [](const Measure& mu, double r, Regime regime, std::vector<int> n_values,
           const SolverConfig& solver) {
            SweepOptions opt;
            opt.solver = solver;
            return rate_sweep(mu, r, regime, std::move(n_values), opt);
        },
        py::arg("mu"), py::arg("r"), py::arg("regime"), py::arg("n_values"),
        py::arg("solver") = SolverConfig{});

    m.def("quantization_dimension",
          [](const RateSeries& s) { return quantization_dimension(s); });
}
