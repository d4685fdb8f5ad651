// Derivatives of the confluent function and the associated family of
// solutions of its hypergeometric PDE system.
#pragma once

#include "hyperfun/series.hpp"

namespace hyperfun {

// Mixed partial derivative of the confluent function, computed through the
// exact parameter-shift identity
//   d^{i,j} H(a, b; c)(xi, eta)
//     = (a)_{|i|-|j|} prod_l (b_l)_{i_l} / (c_l)_{i_l}
//       * H(a+|i|-|j|, b+i; c+i)(xi, eta).
// xi_orders has one entry per xi variable, eta_orders one per eta variable.
double ha_derivative(const HaParams& params, const EvalPoint& pt,
                     const MultiIndex& xi_orders, const MultiIndex& eta_orders,
                     const Truncation& t);

// Parameter set of the k-th member of the solution family: the first k
// variables have their lower parameters reflected,
//   a -> a + sum_{l<k} (1 - c_l),  b_l -> b_l + 1 - c_l,  c_l -> 2 - c_l.
HaParams family_params(const HaParams& params, int k);

// The k-th solution of the hypergeometric system attached to (a; b; c),
//   omega_k = C_k * prod_{l<k} xi_l^{1-c_l} * H(family_params(k))(xi, eta),
// with |xi_l|^{1-c_l} as the real branch for negative arguments. Requires
// xi_l != 0 for l < k. k ranges over 0..n, giving with variable
// permutations the full set of solutions of the system.
double ha_solution_family(const HaParams& params, const EvalPoint& pt, int k,
                          double c_k, const Truncation& t);

// Real-branch power |base|^expo carrying the sign convention used by the
// solution family prefactors.
double real_branch_pow(double base, double expo);

}  // namespace hyperfun
