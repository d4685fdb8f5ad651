// Decompositions of the complete and confluent functions into Gauss 2F1 and
// 0F1 building blocks, plus the unit-argument Gamma-product identity check.
#pragma once

#include "hyperfun/series.hpp"

#include <utility>

namespace hyperfun {

// Symmetric expansion-index matrix s_{ij}, 2 <= i <= j <= n, stored row-major
// as (2,2), (2,3), ..., (2,n), (3,3), ..., (n,n).
struct SMatrix {
    int n = 0;
    std::vector<int> entries;

    int total() const {
        int t = 0;
        for (int v : entries) t += v;
        return t;
    }
    int at(int i, int j) const;
};

// Number of independent entries for a given n.
int s_entry_count(int n);

// Exponent vectors derived from an index matrix:
//   A_l = sum_{i=2}^{l+1} sum_{j=i}^{n} s_{ij}
//   B_l = sum_{i=2}^{l}   s_{il} + sum_{i=l+1}^{n} s_{l+1,i}
// with A_n the full entry total and A_l >= B_l >= 0 throughout.
struct ABPair {
    std::vector<int> A;
    std::vector<int> B;
};
ABPair ab_from_s(const SMatrix& s);

// Complete function as a sum of products of n Gauss functions indexed by the
// matrices s:
//   F = sum_s (a)_{A_n} / prod s_{ij}!
//         prod_l (b_l)_{B_l} / (c_l)_{B_l} x_l^{B_l}
//                2F1(a + A_l, b_l + B_l; c_l + B_l; x_l).
double fa_decomposed(const HaParams& params, const std::vector<double>& x,
                     const Truncation& t);

// The same expansion written in the ratios w_l = x_l / (x_l - 1):
//   F = prod_l (1 - w_l)^{b_l}
//       sum_s (a)_{A_n} / prod s_{ij}!
//         prod_l (b_l)_{B_l} / (c_l)_{B_l} w_l^{B_l}
//                2F1(c_l - a + B_l - A_l, b_l + B_l; c_l + B_l; w_l).
double fa_decomposed_transformed(const HaParams& params,
                                 const std::vector<double>& x,
                                 const Truncation& t);

// Core of the transformed expansion with w and 1-w supplied directly; this is
// the analytic continuation route used near the singular locus, where
// 1 - w_l is known exactly from geometry. Requires |w_l| < 1.
double fa_from_ratios(const HaParams& params, const std::vector<double>& w,
                      const std::vector<double>& one_minus_w,
                      const Truncation& t);

// One-variable-at-a-time recursive expansion (n = 2 and n = 3):
//   F^{(n)} = sum_{i_2..i_n} (a)_I (b_1)_I / ((c_1)_I) prod_{t>=2} (b_t)_{i_t}
//             / ((c_t)_{i_t} i_t!) x_1^I prod x_t^{i_t}
//             2F1(a+I, b_1+I; c_1+I; x_1) F^{(n-1)}(a+I, ...),
// where I = i_2 + ... + i_n.
double fa_recursive(const HaParams& params, const std::vector<double>& x,
                    const Truncation& t);

// Confluent function as a series of products F^{(n)} x 0F1. The eta block
// enters only through its sum (an exact reduction), so the expansion reads
//   H = F(a,b;c;xi) 0F1(1-a; -e) +
//       sum_{k>=1} sum_{l=1}^{k} binom(k-1, l-1) (-1)^{k+l} k!/l!
//         e^l / (1-a)_l
//         sum_{|i|=k} prod_l (b_l)_{i_l} / ((c_l)_{i_l} i_l!) xi^i
//           F(a+k, b+i; c+i; xi) 0F1(1-a+l; -e)
// with e = sum eta. Accumulated in extended precision; the coefficients grow
// factorially against the decaying argument powers.
double ha_decomposed(const HaParams& params, const EvalPoint& pt,
                     const Truncation& t);

// Unit-argument identity behind the normalization constants: returns the pair
// (lattice sum, closed form) where the closed form is
//   Gamma(m/2 - 1) Gamma(at)^{n-1} / prod_l Gamma(at - alpha_l),
// at = m/2 - 1 + sum alpha, and the lattice sum runs the transformed
// expansion of the complete function at unit arguments. Supports n <= 3; the
// sum converges when the shell decay exponent stays below -1.
std::pair<double, double> gamma_identity_check(int m,
                                               const std::vector<double>& alpha,
                                               const Truncation& t);

}  // namespace hyperfun
