// Residual checks: the hypergeometric PDE system satisfied by the solution
// family, the same system reached through the substitution from the singular
// elliptic equation, and finite-difference residuals of that equation.
#pragma once

#include "hyperfun/helmholtz.hpp"

#include <functional>

namespace hyperfun {

struct ResidualReport {
    std::vector<double> point;
    double residual = 0.0;        // signed equation value
    double scale = 0.0;           // largest magnitude among the equation terms
    double step = 0.0;            // finite-difference step, 0 for exact routes
    double order_estimate = 0.0;  // observed convergence order, 0 for exact routes

    double relative() const {
        return scale > 0.0 ? std::abs(residual) / scale : std::abs(residual);
    }
};

// Residuals of the n + p equations of the hypergeometric system
//   xi_i(1-xi_i) w_{x_i x_i} - xi_i sum_{j != i} xi_j w_{x_i x_j}
//     + xi_i sum_j eta_j w_{x_i eta_j} + [c_i - (a+b_i+1) xi_i] w_{x_i}
//     - b_i sum_{j != i} xi_j w_{x_j} + b_i sum_j eta_j w_{eta_j} - a b_i w = 0
//   sum_l eta_l w_{eta_l eta_j} - sum_l xi_l w_{x_l eta_j} + (1-a) w_{eta_j} + w = 0
// evaluated on the k-th member of the solution family through the exact
// derivative identity (no finite differences).
std::vector<ResidualReport> hypergeometric_system_residual(const HaParams& params,
                                                           const EvalPoint& pt,
                                                           int k,
                                                           const Truncation& t);

// Same residuals at the system parameters induced by a singular-equation
// configuration (a = alpha~_0, b_i = alpha_i, c_i = 2 alpha_i) and the
// arguments induced by a point pair.
std::vector<ResidualReport> substitution_system_residual(const SingularConfig& cfg,
                                                         const PointPair& pt,
                                                         int k,
                                                         const Truncation& t);

// Second-order central finite-difference residual of the singular elliptic
// equation for an arbitrary field u at the point x with step h; the residual
// is also evaluated at 16h and 8h, where stencil truncation still dominates
// series round-off, to estimate the convergence order. The singular
// coordinates must stay interior at x_j - 16h.
ResidualReport helmholtz_residual(const SingularConfig& cfg,
                                  const std::function<double(const std::vector<double>&)>& u,
                                  const std::vector<double>& x, double h);

}  // namespace hyperfun
