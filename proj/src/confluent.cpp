#include "hyperfun/confluent.hpp"

#include <cmath>

namespace hyperfun {

double ha_derivative(const HaParams& params, const EvalPoint& pt,
                     const MultiIndex& xi_orders, const MultiIndex& eta_orders,
                     const Truncation& t) {
    params.validate();
    if (static_cast<int>(xi_orders.components.size()) != params.n())
        throw ValidationError("ha_derivative: xi order count mismatch");
    if (static_cast<int>(eta_orders.components.size()) != pt.p())
        throw ValidationError("ha_derivative: eta order count mismatch");
    for (int v : xi_orders.components)
        if (v < 0) throw ValidationError("ha_derivative: negative xi order");
    for (int v : eta_orders.components)
        if (v < 0) throw ValidationError("ha_derivative: negative eta order");

    int shift = xi_orders.total() - eta_orders.total();
    double pref = pochhammer(params.a, shift);
    HaParams shifted;
    shifted.a = params.a + shift;
    shifted.b = params.b;
    shifted.c = params.c;
    for (int l = 0; l < params.n(); ++l) {
        int il = xi_orders.components[static_cast<size_t>(l)];
        if (il > 0) {
            pref *= pochhammer(params.b[static_cast<size_t>(l)], il) /
                    pochhammer(params.c[static_cast<size_t>(l)], il);
            shifted.b[static_cast<size_t>(l)] += il;
            shifted.c[static_cast<size_t>(l)] += il;
        }
    }
    return pref * ha_eval(shifted, pt, t);
}

HaParams family_params(const HaParams& params, int k) {
    params.validate();
    if (k < 0 || k > params.n())
        throw ValidationError("family_params: index must lie in [0, n]");
    HaParams out = params;
    for (int l = 0; l < k; ++l) {
        double cl = params.c[static_cast<size_t>(l)];
        out.a += 1.0 - cl;
        out.b[static_cast<size_t>(l)] += 1.0 - cl;
        out.c[static_cast<size_t>(l)] = 2.0 - cl;
    }
    return out;
}

double real_branch_pow(double base, double expo) {
    if (base > 0.0) return std::pow(base, expo);
    if (base < 0.0) return std::pow(-base, expo);
    throw DomainError("real_branch_pow: zero base with arbitrary exponent");
}

double ha_solution_family(const HaParams& params, const EvalPoint& pt, int k,
                          double c_k, const Truncation& t) {
    HaParams fam = family_params(params, k);
    double pref = c_k;
    for (int l = 0; l < k; ++l) {
        double xl = pt.xi[static_cast<size_t>(l)];
        if (xl == 0.0)
            throw DomainError(
                "ha_solution_family: xi_l = 0 lies on the branch locus of the "
                "prefactor for l < k");
        pref *= real_branch_pow(xl, 1.0 - params.c[static_cast<size_t>(l)]);
    }
    return pref * ha_eval(fam, pt, t);
}

}  // namespace hyperfun
