#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <hyperfun/confluent.hpp>
#include <hyperfun/decomposition.hpp>
#include <hyperfun/helmholtz.hpp>
#include <hyperfun/scalar.hpp>
#include <hyperfun/series.hpp>
#include <hyperfun/verify.hpp>

namespace py = pybind11;
using namespace hyperfun;

PYBIND11_MODULE(hyperfun, m) {
    m.doc() = "Confluent hypergeometric functions of many variables and "
              "fundamental solutions of the singular elliptic equation";

    auto err = py::register_exception<Error>(m, "Error");
    py::register_exception<ValidationError>(m, "ValidationError", err);
    py::register_exception<DomainError>(m, "DomainError", err);
    py::register_exception<PoleError>(m, "PoleError", err);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", err);

    py::class_<Truncation>(m, "Truncation")
        .def(py::init([](double rel_tol, int max_total_order, int term_cap,
                         int outer_max_order, double tail_budget) {
                 Truncation t;
                 t.rel_tol = rel_tol;
                 t.max_total_order = max_total_order;
                 t.term_cap = term_cap;
                 t.outer_max_order = outer_max_order;
                 t.tail_budget = tail_budget;
                 return t;
             }),
             py::arg("rel_tol") = Truncation{}.rel_tol,
             py::arg("max_total_order") = Truncation{}.max_total_order,
             py::arg("term_cap") = Truncation{}.term_cap,
             py::arg("outer_max_order") = Truncation{}.outer_max_order,
             py::arg("tail_budget") = Truncation{}.tail_budget)
        .def_readwrite("rel_tol", &Truncation::rel_tol)
        .def_readwrite("max_total_order", &Truncation::max_total_order)
        .def_readwrite("term_cap", &Truncation::term_cap)
        .def_readwrite("outer_max_order", &Truncation::outer_max_order)
        .def_readwrite("tail_budget", &Truncation::tail_budget);

    py::class_<HaParams>(m, "HaParams")
        .def(py::init([](double a, std::vector<double> b, std::vector<double> c) {
                 HaParams p;
                 p.a = a;
                 p.b = std::move(b);
                 p.c = std::move(c);
                 return p;
             }),
             py::arg("a"), py::arg("b"), py::arg("c"))
        .def_readwrite("a", &HaParams::a)
        .def_readwrite("b", &HaParams::b)
        .def_readwrite("c", &HaParams::c)
        .def_property_readonly("n", &HaParams::n);

    py::class_<ErdelyiParams>(m, "ErdelyiParams")
        .def(py::init([](double a, std::vector<double> b, std::vector<double> d,
                         std::vector<double> c) {
                 ErdelyiParams p;
                 p.a = a;
                 p.b = std::move(b);
                 p.d = std::move(d);
                 p.c = std::move(c);
                 return p;
             }),
             py::arg("a"), py::arg("b"), py::arg("d"), py::arg("c"))
        .def_readwrite("a", &ErdelyiParams::a)
        .def_readwrite("b", &ErdelyiParams::b)
        .def_readwrite("d", &ErdelyiParams::d)
        .def_readwrite("c", &ErdelyiParams::c)
        .def_property_readonly("n", &ErdelyiParams::n)
        .def_property_readonly("p", &ErdelyiParams::p);

    py::class_<EvalPoint>(m, "EvalPoint")
        .def(py::init([](std::vector<double> xi, std::vector<double> eta) {
                 EvalPoint pt;
                 pt.xi = std::move(xi);
                 pt.eta = std::move(eta);
                 return pt;
             }),
             py::arg("xi"), py::arg("eta") = std::vector<double>{})
        .def_readwrite("xi", &EvalPoint::xi)
        .def_readwrite("eta", &EvalPoint::eta)
        .def_property_readonly("n", &EvalPoint::n)
        .def_property_readonly("p", &EvalPoint::p)
        .def("xi_abs_sum", &EvalPoint::xi_abs_sum);

    py::class_<SingularConfig>(m, "SingularConfig")
        .def(py::init([](int m_, int n, std::vector<double> alpha,
                         std::vector<double> lambda_sq) {
                 SingularConfig c;
                 c.m = m_;
                 c.n = n;
                 c.alpha = std::move(alpha);
                 c.lambda_sq = std::move(lambda_sq);
                 return c;
             }),
             py::arg("m"), py::arg("n"), py::arg("alpha"),
             py::arg("lambda_sq") = std::vector<double>{})
        .def_readwrite("m", &SingularConfig::m)
        .def_readwrite("n", &SingularConfig::n)
        .def_readwrite("alpha", &SingularConfig::alpha)
        .def_readwrite("lambda_sq", &SingularConfig::lambda_sq)
        .def_property_readonly("p", &SingularConfig::p)
        .def("lambda_sq_sum", &SingularConfig::lambda_sq_sum)
        .def("validate", &SingularConfig::validate);

    py::class_<PointPair>(m, "PointPair")
        .def(py::init([](std::vector<double> x, std::vector<double> x0) {
                 PointPair pp;
                 pp.x = std::move(x);
                 pp.x0 = std::move(x0);
                 return pp;
             }),
             py::arg("x"), py::arg("x0"))
        .def_readwrite("x", &PointPair::x)
        .def_readwrite("x0", &PointPair::x0);

    py::class_<SolutionGeometry>(m, "SolutionGeometry")
        .def_readonly("r_sq", &SolutionGeometry::r_sq)
        .def_readonly("rj_sq", &SolutionGeometry::rj_sq)
        .def_readonly("xi", &SolutionGeometry::xi)
        .def_readonly("eta", &SolutionGeometry::eta)
        .def_readonly("alpha_tilde", &SolutionGeometry::alpha_tilde)
        .def_readonly("gamma", &SolutionGeometry::gamma);

    py::class_<ProbeSample>(m, "ProbeSample")
        .def_readonly("radius", &ProbeSample::radius)
        .def_readonly("scaled", &ProbeSample::scaled);

    py::class_<ResidualReport>(m, "ResidualReport")
        .def_readonly("point", &ResidualReport::point)
        .def_readonly("residual", &ResidualReport::residual)
        .def_readonly("scale", &ResidualReport::scale)
        .def_readonly("step", &ResidualReport::step)
        .def_readonly("order_estimate", &ResidualReport::order_estimate)
        .def("relative", &ResidualReport::relative);

    m.def(
        "gauss_2f1",
        [](double a, double b, double c, double x, const Truncation& t) {
            return gauss_2f1(Gauss2F1Params{a, b, c, x}, t);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"),
        py::arg("t") = Truncation{},
        "Gauss hypergeometric function for |x| < 1 plus the unit-argument "
        "closed form");
    m.def("gauss_sum_at_unity", &gauss_sum_at_unity, py::arg("a"), py::arg("b"),
          py::arg("c"),
          "Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)), requires c-a-b > 0");
    m.def("zero_f_one", &zero_f_one, py::arg("denominator"), py::arg("z"),
          py::arg("t") = Truncation{}, "Confluent limit series 0F1(; d; z)");
    m.def("pochhammer", &pochhammer, py::arg("base"), py::arg("shift"),
          "Rising factorial with integer shift of either sign");
    m.def("gamma_value", &gamma_value, py::arg("x"),
          "Gamma function as a signed double");

    m.def("lauricella_fa", &lauricella_fa, py::arg("params"), py::arg("x"),
          py::arg("t") = Truncation{},
          "Complete hypergeometric function of n variables on sum |x| < 1");
    m.def("erdelyi_h", &erdelyi_h, py::arg("params"), py::arg("pt"),
          py::arg("t") = Truncation{},
          "Parent series of n+p variables whose confluent limit is ha_eval");
    m.def("ha_eval", &ha_eval, py::arg("params"), py::arg("pt"),
          py::arg("t") = Truncation{},
          "Confluent hypergeometric function of n+p variables");
    m.def("ha_eval_direct", &ha_eval_direct, py::arg("params"), py::arg("pt"),
          py::arg("t") = Truncation{},
          "Same function summed over the full index lattice, no eta reduction");
    m.def("ha_decomposed", &ha_decomposed, py::arg("params"), py::arg("pt"),
          py::arg("t") = Truncation{},
          "Confluent function through its descending decomposition");

    m.def("fa_decomposed", &fa_decomposed, py::arg("params"), py::arg("x"),
          py::arg("t") = Truncation{},
          "Complete function as a lattice sum of Gauss-function products");
    m.def("fa_decomposed_transformed", &fa_decomposed_transformed,
          py::arg("params"), py::arg("x"), py::arg("t") = Truncation{},
          "The same expansion in the ratios x/(x-1)");
    m.def("fa_recursive", &fa_recursive, py::arg("params"), py::arg("x"),
          py::arg("t") = Truncation{},
          "One-variable-at-a-time recursive expansion, n = 2 and 3");
    m.def("fa_from_ratios", &fa_from_ratios, py::arg("params"), py::arg("w"),
          py::arg("one_minus_w"), py::arg("t") = Truncation{},
          "Transformed expansion with w and 1-w supplied exactly");
    m.def("gamma_identity_check", &gamma_identity_check, py::arg("m"),
          py::arg("alpha"), py::arg("t") = Truncation{},
          "Returns (lattice sum, closed Gamma form) of the normalization "
          "identity at unit arguments");

    m.def(
        "ha_derivative",
        [](const HaParams& params, const EvalPoint& pt,
           const std::vector<int>& xi_orders, const std::vector<int>& eta_orders,
           const Truncation& t) {
            return ha_derivative(params, pt, MultiIndex(xi_orders),
                                 MultiIndex(eta_orders), t);
        },
        py::arg("params"), py::arg("pt"), py::arg("xi_orders"),
        py::arg("eta_orders"), py::arg("t") = Truncation{},
        "Mixed partial derivative through the exact parameter-shift identity");
    m.def("family_params", &family_params, py::arg("params"), py::arg("k"),
          "Parameter set of the k-th member of the solution family");
    m.def("ha_solution_family", &ha_solution_family, py::arg("params"),
          py::arg("pt"), py::arg("k"), py::arg("c_k"),
          py::arg("t") = Truncation{},
          "The k-th solution of the hypergeometric system");

    m.def("alpha_tilde_k", &alpha_tilde_k, py::arg("cfg"), py::arg("k"),
          "Exponent of the k-th fundamental solution");
    m.def("gamma_coefficient", &gamma_coefficient, py::arg("cfg"), py::arg("k"),
          "Normalization constant of the k-th fundamental solution");
    m.def("solution_params", &solution_params, py::arg("cfg"), py::arg("k"),
          "Hypergeometric parameters of the k-th fundamental solution");
    m.def("geometry", &geometry, py::arg("cfg"), py::arg("pt"),
          "Distances, series arguments and ladders of a point pair");
    m.def("fundamental_solution", &fundamental_solution, py::arg("cfg"),
          py::arg("pt"), py::arg("k"), py::arg("t") = Truncation{},
          "The k-th fundamental solution of the singular elliptic equation");
    m.def("fundamental_solution_near", &fundamental_solution_near,
          py::arg("cfg"), py::arg("pt"), py::arg("k"),
          py::arg("t") = Truncation{},
          "Route-pinned direct series, valid while sum |xi| < 1");
    m.def("fundamental_solution_far", &fundamental_solution_far, py::arg("cfg"),
          py::arg("pt"), py::arg("k"), py::arg("t") = Truncation{},
          "Route-pinned descending continuation");
    m.def("singularity_probe", &singularity_probe, py::arg("cfg"),
          py::arg("x0"), py::arg("direction"), py::arg("radii"), py::arg("k"),
          py::arg("t") = Truncation{},
          "Scaled solution samples along a ray into the singular point");
    m.def("probe_limit", &probe_limit, py::arg("cfg"),
          "Closed-form limit of the k = 0 probe");

    m.def("hypergeometric_system_residual", &hypergeometric_system_residual,
          py::arg("params"), py::arg("pt"), py::arg("k"),
          py::arg("t") = Truncation{},
          "Residuals of the n+p system equations on the k-th family member");
    m.def("substitution_system_residual", &substitution_system_residual,
          py::arg("cfg"), py::arg("pt"), py::arg("k"),
          py::arg("t") = Truncation{},
          "System residuals at the parameters induced by a singular "
          "configuration");
    m.def("helmholtz_residual", &helmholtz_residual, py::arg("cfg"),
          py::arg("u"), py::arg("x"), py::arg("h"),
          "Central finite-difference residual of the singular elliptic "
          "equation for an arbitrary field");
}
