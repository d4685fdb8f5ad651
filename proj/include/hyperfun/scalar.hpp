// Scalar special-function kernels: log-Gamma with sign, Pochhammer symbols,
// the Gauss 2F1 series with its unit-argument closed form, and the confluent
// limit series 0F_p.
#pragma once

#include "hyperfun/types.hpp"

namespace hyperfun {

struct LogGamma {
    double log_abs;  // log |Gamma(x)|
    int sign;        // sign of Gamma(x), +1 or -1
};

// Throws PoleError at nonpositive integers.
LogGamma log_gamma(double x);

// Gamma(x) as a signed double; overflows to +/-inf for large x.
double gamma_value(double x);

// Rising factorial (base)_shift for integer shift of either sign, computed as
// an explicit product (never as a quotient of Gamma values).
//   shift >= 0: base (base+1) ... (base+shift-1), empty product = 1
//   shift <  0: 1 / [(base-1)(base-2)...(base+shift)]
// Throws PoleError when a negative shift divides by zero.
double pochhammer(double base, int shift);

struct Gauss2F1Params {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double x = 0.0;
};

// Gauss hypergeometric sum at unit argument,
// Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
// Requires c-a-b > 0 and no pole among the four Gamma arguments.
double gauss_sum_at_unity(double a, double b, double c);

// 2F1(a, b; c; x) for |x| < 1, plus the x = 1 closed form. Dispatch:
//   x == 0             -> 1
//   x == 1             -> gauss_sum_at_unity
//   |x| >= 1 otherwise -> DomainError
//   terminating series (a or b a nonpositive integer) -> direct sum
//   x > 0.85           -> linear transformation in powers of 1-x
//   otherwise          -> direct sum
// The 1-x transformation requires c-a-b away from an integer; when it is
// within 1e-6 of one the direct sum is used as far as it reaches and a
// ConvergenceError may result for x very close to 1.
double gauss_2f1(const Gauss2F1Params& p, const Truncation& t);

// Same function with 1-x supplied exactly by the caller; used where x is
// close to 1 and 1-x is known without cancellation.
double gauss_2f1_given_complement(double a, double b, double c, double x,
                                  double one_minus_x, const Truncation& t);

struct ZeroFpParams {
    double denominator = 0.0;     // shared lower parameter
    std::vector<double> args;     // one entry per upper slot
};

// The p-argument confluent limit series. It collapses exactly to a single
// series in the argument sum z = sum(args):  sum_j z^j / ((d)_j j!).
double zero_f_p(const ZeroFpParams& p, const Truncation& t);

// Single-argument form, 0F1(; d; z).
double zero_f_one(double denominator, double z, const Truncation& t);

}  // namespace hyperfun
