// Exact rational polynomials and Euler-operator calculus, used to certify the
// operator expansion identities behind the confluent decomposition at the
// symbolic level (no floating point).
#pragma once

#include "hyperfun/types.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>

namespace hyperfun {

using Rational = boost::multiprecision::cpp_rational;

// Sparse polynomial over the rationals in nx variables x_1..x_nx followed by
// ny variables y_1..y_ny; exponent vectors have length nx + ny.
class RationalPoly {
public:
    RationalPoly(int nx, int ny) : nx_(nx), ny_(ny) {
        if (nx < 0 || ny < 0)
            throw ValidationError("RationalPoly: negative variable count");
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int vars() const { return nx_ + ny_; }

    void add_term(const std::vector<int>& exponents, const Rational& coeff);
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RationalPoly& operator+=(const RationalPoly& other);
    RationalPoly scaled(const Rational& s) const;
    bool operator==(const RationalPoly& other) const {
        return nx_ == other.nx_ && ny_ == other.ny_ && terms_ == other.terms_;
    }

    // d/d(var) and multiplication by (var), with var indexing all nx + ny
    // variables together.
    RationalPoly derivative(int var) const;
    RationalPoly times_var(int var) const;

private:
    int nx_;
    int ny_;
    std::map<std::vector<int>, Rational> terms_;
};

// One Euler operator v d/dv, acting on an x- or y-variable.
struct EulerOp {
    enum class Block { X, Y };
    Block block = Block::X;
    int index = 0;
};

RationalPoly apply_euler(const EulerOp& op, const RationalPoly& f);

// Rising factorial (T)_k = T (T+1) ... (T+k-1) of the operator
// T = sign * (sum of all Euler operators of one block), applied to f.
RationalPoly rising_factorial_op(EulerOp::Block block, int sign, int k,
                                 const RationalPoly& f);

// Expansion of (-sum_x Euler)_k f into monomial-weighted mixed derivatives:
//   sum_{|i|=k} (-1)^k k! / prod i_l!  x^i  d^i f / dx^i.
RationalPoly delta_sum_expansion(const RationalPoly& f, int k);

// Expansion of (+sum_y Euler)_k f:
//   sum_{l=1}^{k} binom(k-1, l-1) k! sum_{|j|=l} y^j / prod j_u!  d^j f / dy^j
// (k = 0 gives f back).
RationalPoly sigma_sum_expansion(const RationalPoly& f, int k);

// One-variable specialization of the same expansion (requires ny = 1):
//   sum_{l=1}^{k} k! (k-1)! / (l! (l-1)! (k-l)!)  y^l  d^l f / dy^l.
RationalPoly sigma_sum_expansion_single(const RationalPoly& f, int k);

}  // namespace hyperfun
