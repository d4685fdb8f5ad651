#include "hyperfun/scalar.hpp"

#include <cmath>
#include <limits>

namespace hyperfun {

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

bool near_integer(double x, double tol) {
    return std::abs(x - std::round(x)) < tol;
}

}  // namespace

LogGamma log_gamma(double x) {
    if (!std::isfinite(x)) throw DomainError("log_gamma: nonfinite argument");
    if (is_nonpositive_integer(x))
        throw PoleError("log_gamma: pole at nonpositive integer " + std::to_string(x));
    int sign = 1;
    if (x < 0.0) {
        // Gamma alternates sign between consecutive negative integers:
        // positive on (-2,-1), negative on (-1,0), etc.
        double k = std::floor(x);
        long long kk = static_cast<long long>(k);
        sign = (kk % 2 == 0) ? 1 : -1;
    }
    return {std::lgamma(x), sign};
}

double gamma_value(double x) {
    LogGamma lg = log_gamma(x);
    return lg.sign * std::exp(lg.log_abs);
}

double pochhammer(double base, int shift) {
    if (shift == 0) return 1.0;
    if (shift > 0) {
        double prod = 1.0;
        for (int t = 0; t < shift; ++t) prod *= base + t;
        return prod;
    }
    double denom = 1.0;
    for (int t = 1; t <= -shift; ++t) denom *= base - t;
    if (denom == 0.0)
        throw PoleError("pochhammer: negative shift hits zero factor, base=" +
                        std::to_string(base) + " shift=" + std::to_string(shift));
    return 1.0 / denom;
}

double gauss_sum_at_unity(double a, double b, double c) {
    double excess = c - a - b;
    if (excess <= 0.0)
        throw DomainError("gauss_sum_at_unity: requires c-a-b > 0, got " +
                          std::to_string(excess));
    LogGamma lc = log_gamma(c);
    LogGamma le = log_gamma(excess);
    LogGamma lca = log_gamma(c - a);
    LogGamma lcb = log_gamma(c - b);
    double mag = std::exp(lc.log_abs + le.log_abs - lca.log_abs - lcb.log_abs);
    return mag * lc.sign * le.sign * lca.sign * lcb.sign;
}

namespace {

// Plain power series sum; assumes convergence checks were done by the caller.
double gauss_series(double a, double b, double c, double x, const Truncation& t) {
    CompensatedSum<double> acc;
    double term = 1.0;
    acc.add(term);
    int small_streak = 0;
    for (int k = 0; k < t.term_cap; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x;
        acc.add(term);
        if (std::abs(term) <= t.rel_tol * std::abs(acc.value())) {
            if (++small_streak >= 3) return acc.value();
        } else {
            small_streak = 0;
        }
    }
    throw ConvergenceError("gauss_2f1: series did not converge within term cap");
}

// Expansion in powers of u = 1-x:
//   F = G1 * F(a,b; a+b-c+1; u) + u^{c-a-b} * G2 * F(c-a,c-b; c-a-b+1; u)
// with G1 = G(c)G(c-a-b)/(G(c-a)G(c-b)) and G2 = G(c)G(a+b-c)/(G(a)G(b)).
// A pole in a denominator Gamma zeroes that branch.
double gauss_near_unity(double a, double b, double c, double u, const Truncation& t) {
    auto coeff = [](double num1, double num2, double den1, double den2) -> double {
        LogGamma ln1 = log_gamma(num1);
        LogGamma ln2 = log_gamma(num2);
        LogGamma ld1, ld2;
        try {
            ld1 = log_gamma(den1);
            ld2 = log_gamma(den2);
        } catch (const PoleError&) {
            return 0.0;
        }
        double mag = std::exp(ln1.log_abs + ln2.log_abs - ld1.log_abs - ld2.log_abs);
        return mag * ln1.sign * ln2.sign * ld1.sign * ld2.sign;
    };
    double excess = c - a - b;
    double g1 = coeff(c, excess, c - a, c - b);
    double g2 = coeff(c, -excess, a, b);
    double part1 = (g1 != 0.0) ? g1 * gauss_series(a, b, a + b - c + 1.0, u, t) : 0.0;
    double part2 = (g2 != 0.0)
                       ? std::pow(u, excess) * g2 *
                             gauss_series(c - a, c - b, excess + 1.0, u, t)
                       : 0.0;
    return part1 + part2;
}

}  // namespace

double gauss_2f1_given_complement(double a, double b, double c, double x,
                                  double one_minus_x, const Truncation& t) {
    if (is_nonpositive_integer(c))
        throw PoleError("gauss_2f1: lower parameter is a nonpositive integer");
    if (x == 0.0) return 1.0;
    // A nonpositive integer numerator parameter terminates the series, which
    // then converges for every x.
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
        return gauss_series(a, b, c, x, t);
    if (one_minus_x == 0.0) return gauss_sum_at_unity(a, b, c);
    if (std::abs(x) >= 1.0)
        throw DomainError("gauss_2f1: |x| >= 1 outside the series domain");
    if (x > 0.85) {
        double excess = c - a - b;
        if (!near_integer(excess, 1e-6)) return gauss_near_unity(a, b, c, one_minus_x, t);
    }
    return gauss_series(a, b, c, x, t);
}

double gauss_2f1(const Gauss2F1Params& p, const Truncation& t) {
    return gauss_2f1_given_complement(p.a, p.b, p.c, p.x, 1.0 - p.x, t);
}

double zero_f_one(double denominator, double z, const Truncation& t) {
    if (is_nonpositive_integer(denominator))
        throw PoleError("zero_f_p: lower parameter is a nonpositive integer");
    CompensatedSum<double> acc;
    double term = 1.0;
    acc.add(term);
    int small_streak = 0;
    for (int j = 0; j < t.term_cap; ++j) {
        term *= z / ((denominator + j) * (j + 1));
        acc.add(term);
        if (std::abs(term) <= t.rel_tol * std::abs(acc.value())) {
            if (++small_streak >= 3) return acc.value();
        } else {
            small_streak = 0;
        }
    }
    throw ConvergenceError("zero_f_p: series did not converge within term cap");
}

double zero_f_p(const ZeroFpParams& p, const Truncation& t) {
    double z = 0.0;
    for (double v : p.args) z += v;
    return zero_f_one(p.denominator, z, t);
}

}  // namespace hyperfun
