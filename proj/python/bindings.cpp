#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfd/partial.hpp"
#include "gfd/ring.hpp"
#include "gfd/solver.hpp"
#include "gfd/taylor.hpp"

namespace py = pybind11;
using namespace gfd;

namespace {

Bindings to_bindings(const std::map<std::string, double>& values) {
    return Bindings(values.begin(), values.end());
}

EvalMethod method_from(const std::string& name, double h) {
    if (name == "exact") return ExactReduction{};
    if (name == "limit") return LimitQuotient{h};
    throw ParameterError("method must be 'exact' or 'limit'");
}

OperatorKind kind_from(const std::string& name, const std::string& weight, double caputo_a) {
    if (name == "gfd") return OperatorKind::gfd(parse_weight_spec(weight));
    if (name == "khalil") return OperatorKind::khalil();
    if (name == "anderson") return OperatorKind::anderson_ulness();
    if (name == "katugampola") return OperatorKind::katugampola();
    if (name == "guebbai") return OperatorKind::guebbai_ghiat();
    if (name == "camrud") return OperatorKind::camrud();
    if (name == "caputo") return OperatorKind::caputo_l1(caputo_a);
    throw ParameterError("unknown operator '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weighted fractional derivatives: symbolic expressions, the operator "
              "family, identity audits, fractional Taylor series, and the linear "
              "fractional ODE/PDE residual checks.";

    py::register_exception<Error>(m, "GfdError");

    // expression layer
    m.def(
        "evaluate",
        [](const std::string& expr, const std::map<std::string, double>& values) {
            return parse(expr).evaluate(to_bindings(values));
        },
        py::arg("expr"), py::arg("bindings"),
        "Evaluate an expression under variable bindings.");
    m.def(
        "differentiate",
        [](const std::string& expr, const std::string& var) {
            return parse(expr).differentiate(var).simplify().to_string();
        },
        py::arg("expr"), py::arg("var") = "t",
        "Symbolic classical derivative, simplified, as a string.");
    m.def(
        "simplify",
        [](const std::string& expr) { return parse(expr).simplify().to_string(); },
        py::arg("expr"));
    m.def(
        "free_variables",
        [](const std::string& expr) {
            const auto vars = parse(expr).free_variables();
            return std::vector<std::string>(vars.begin(), vars.end());
        },
        py::arg("expr"));

    // operator family
    m.def(
        "gfd",
        [](const std::string& expr, double alpha, const std::string& weight, double t,
           const std::string& method, double h) {
            return gfd_derivative(parse(expr), Alpha(alpha), parse_weight_spec(weight), t,
                                  method_from(method, h));
        },
        py::arg("expr"), py::arg("alpha"), py::arg("weight") = "one", py::arg("t"),
        py::arg("method") = "exact", py::arg("h") = 1e-6,
        "Weighted fractional derivative at t.");
    m.def(
        "named_derivative",
        [](const std::string& op, const std::string& expr, double alpha, double t,
           const std::string& method, double h, const std::string& weight, double caputo_a,
           int caputo_steps) {
            return named_derivative(kind_from(op, weight, caputo_a), parse(expr), Alpha(alpha),
                                    t, method_from(method, h), caputo_steps);
        },
        py::arg("op"), py::arg("expr"), py::arg("alpha"), py::arg("t"),
        py::arg("method") = "exact", py::arg("h") = 1e-6, py::arg("weight") = "one",
        py::arg("caputo_a") = 0.0, py::arg("caputo_steps") = 1000,
        "One of: gfd, khalil, anderson, katugampola, guebbai, camrud, caputo.");
    m.def(
        "caputo",
        [](const std::string& expr, double alpha, double a, double t, int n_steps) {
            return caputo(parse(expr), Alpha(alpha), a, t, n_steps);
        },
        py::arg("expr"), py::arg("alpha"), py::arg("a"), py::arg("t"),
        py::arg("n_steps") = 1000, "Integral-form derivative by midpoint product integration.");
    m.def(
        "weight_of",
        [](const std::string& op, const std::string& expr, double alpha, double t,
           const std::string& weight, double caputo_a) {
            return weight_of(kind_from(op, weight, caputo_a), parse(expr), Alpha(alpha), t);
        },
        py::arg("op"), py::arg("expr"), py::arg("alpha"), py::arg("t"),
        py::arg("weight") = "one", py::arg("caputo_a") = 0.0,
        "The weight representing an operator inside the weighted family.");
    m.def(
        "gfd_higher",
        [](const std::string& expr, double alpha, const std::string& weight, double t) {
            return gfd_higher(parse(expr), Alpha(alpha), parse_weight_spec(weight), t);
        },
        py::arg("expr"), py::arg("alpha"), py::arg("weight") = "one", py::arg("t"),
        "Higher-order derivative for alpha above 1.");

    // partial operators
    m.def(
        "gpfd",
        [](const std::string& expr, const std::string& var, double alpha,
           const std::string& weight, const std::map<std::string, double>& point) {
            const PartialSpec spec{var, Alpha(alpha), parse_weight_spec(weight)};
            return gpfd(parse(expr), spec, to_bindings(point));
        },
        py::arg("expr"), py::arg("var"), py::arg("alpha"), py::arg("weight") = "one",
        py::arg("point"), "Axis-wise fractional partial derivative at a positive point.");
    m.def(
        "gpfd_second",
        [](const std::string& expr, const std::string& var_i, const std::string& var_j,
           double alpha, const std::string& weight_i, const std::string& weight_j,
           const std::map<std::string, double>& point) {
            const PartialSpec si{var_i, Alpha(alpha), parse_weight_spec(weight_i)};
            const PartialSpec sj{var_j, Alpha(alpha), parse_weight_spec(weight_j)};
            return gpfd_second(parse(expr), si, sj, to_bindings(point));
        },
        py::arg("expr"), py::arg("var_i"), py::arg("var_j"), py::arg("alpha"),
        py::arg("weight_i") = "one", py::arg("weight_j") = "one", py::arg("point"),
        "Mixed second-order fractional partial derivative.");

    // series
    m.def("rising_factorial", &rising_factorial, py::arg("alpha"), py::arg("i"));
    m.def(
        "taylor_terms",
        [](const std::string& expr, double x0, double alpha, const std::string& weight, int n) {
            const auto s =
                taylor_build(parse(expr), x0, Alpha(alpha), parse_weight_spec(weight), n);
            std::vector<std::pair<double, double>> terms;
            terms.reserve(s.terms.size());
            for (const auto& term : s.terms) terms.emplace_back(term.exponent, term.coefficient);
            return terms;
        },
        py::arg("expr"), py::arg("x0"), py::arg("alpha"), py::arg("weight") = "one",
        py::arg("n") = 10, "(exponent, coefficient) pairs of the truncated series.");
    m.def(
        "taylor_eval",
        [](const std::string& expr, double x0, double alpha, const std::string& weight, int n,
           double x) {
            return taylor_eval(
                taylor_build(parse(expr), x0, Alpha(alpha), parse_weight_spec(weight), n), x);
        },
        py::arg("expr"), py::arg("x0"), py::arg("alpha"), py::arg("weight") = "one",
        py::arg("n") = 10, py::arg("x"));

    // linear fractional ODE and PDE residuals
    m.def(
        "solve_ode_closed",
        [](double a, double b, double c, double alpha, double weight_value, double t0,
           double y0) {
            return solve_linear_closed(LinearFracODE{a, b, c, alpha, weight_value, t0, y0})
                .to_string();
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("alpha"),
        py::arg("weight_value") = 1.0, py::arg("t0"), py::arg("y0"),
        "Closed-form solution of a D(y) + b y = c as an expression string.");
    m.def(
        "solve_ode_rk4",
        [](double a, double b, double c, double alpha, double weight_value, double t0,
           double y0, double t_end, double step) {
            return solve_linear_numeric(LinearFracODE{a, b, c, alpha, weight_value, t0, y0},
                                        t_end, step);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("alpha"),
        py::arg("weight_value") = 1.0, py::arg("t0"), py::arg("y0"), py::arg("t_end"),
        py::arg("step") = 1e-3, "Fixed-step RK4 trajectory as (t, y) pairs.");
    m.def(
        "ode_max_residual",
        [](double a, double b, double c, double alpha, double weight_value, double t0,
           double y0, const std::string& y, const std::vector<double>& grid) {
            return ode_residual(LinearFracODE{a, b, c, alpha, weight_value, t0, y0}, parse(y),
                                grid)
                .max_abs_residual;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("alpha"),
        py::arg("weight_value") = 1.0, py::arg("t0"), py::arg("y0"), py::arg("y"),
        py::arg("grid"));
    m.def(
        "pde_max_residual",
        [](const std::string& equation, const std::string& u, const std::vector<double>& xs,
           const std::vector<double>& ts) {
            PdeForm form = PdeForm::pde1();
            if (equation == "pde1") form = PdeForm::pde1();
            else if (equation == "pde2") form = PdeForm::pde2();
            else if (equation == "pde2-printed") form = PdeForm::pde2_printed();
            else if (equation == "pde2-reduction") form = PdeForm::pde2_full_reduction();
            else throw ParameterError("unknown equation '" + equation + "'");
            return pde_residual(form, parse(u), grid2d(xs, ts)).max_abs_residual;
        },
        py::arg("equation"), py::arg("u"), py::arg("xs"), py::arg("ts"),
        "Max |residual| of a candidate u(x,t) over the tensor grid.");

    // theorem witnesses
    m.def(
        "rolle_witness",
        [](const std::string& f, double a, double b, double alpha, const std::string& weight) {
            return find_rolle_witness(parse(f), a, b, Alpha(alpha), parse_weight_spec(weight))
                .c;
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("weight") = "one");
    m.def(
        "mvt_witness",
        [](const std::string& f, double a, double b, double alpha, const std::string& weight) {
            const auto w =
                find_mvt_witness(parse(f), a, b, Alpha(alpha), parse_weight_spec(weight));
            py::dict out;
            out["c"] = w.corrected.c;
            out["target"] = w.corrected_target;
            out["achieved"] = w.corrected.achieved_value;
            out["printed_target"] = w.printed_target;
            out["printed_attainable"] = w.printed_attainable;
            out["note"] = w.note;
            return out;
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("weight") = "one");

    m.attr("__version__") = "0.1.0";
}
