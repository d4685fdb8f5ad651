// Multivariate hypergeometric series: the n-variable complete function, its
// (n+p)-variable parent, and the confluent function of n+p variables.
#pragma once

#include "hyperfun/scalar.hpp"
#include "hyperfun/types.hpp"

namespace hyperfun {

// n-variable complete hypergeometric function
//   sum_m (a)_{|m|} prod_l (b_l)_{m_l} / ((c_l)_{m_l} m_l!) x_l^{m_l}
// on sum |x_l| < 1.
double lauricella_fa(const HaParams& params, const std::vector<double>& x,
                     const Truncation& t);

// (n+p)-variable parent series
//   sum (a)_{|m|-|q|} prod_l (b_l)_{m_l} / ((c_l)_{m_l} m_l!) xi_l^{m_l}
//        prod_j (b_{n+j})_{q_j} (d_j)_{q_j} eta_j^{q_j} / q_j!
// summed over nondecreasing total order. Convergence is conditional on the
// eta magnitudes; a non-contracting shell sequence raises ConvergenceError.
double erdelyi_h(const ErdelyiParams& params, const EvalPoint& pt,
                 const Truncation& t);

// Confluent function of n+p variables
//   sum (a)_{|m|-|q|} prod_l (b_l)_{m_l} / ((c_l)_{m_l} m_l!) xi_l^{m_l}
//        prod_j eta_j^{q_j} / q_j!
// The eta block depends on the arguments only through their sum, so the
// evaluation first replaces (eta_1..eta_p) by (sum eta); this reduction is
// exact. Requires sum |xi| < 1; a within 1e-9 of a positive integer is
// rejected when any eta is nonzero (the factor (a)_{|m|-|q|} degenerates).
double ha_eval(const HaParams& params, const EvalPoint& pt, const Truncation& t);

// Same function summed over the full (n+p)-dimensional index lattice with no
// eta reduction; reference path for testing the reduction.
double ha_eval_direct(const HaParams& params, const EvalPoint& pt,
                      const Truncation& t);

// The exact eta reduction used by ha_eval: (xi; eta_1..eta_p) -> (xi; sum eta).
EvalPoint ha_reduce_eta(const EvalPoint& pt);

}  // namespace hyperfun
