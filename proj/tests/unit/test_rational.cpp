#include "hyperfun/rational_poly.hpp"

#include <doctest.h>

using namespace hyperfun;

namespace {

// f = 2 x1^2 x2 y + 3 x2 - 1/2, a generic mixed polynomial in (2, 1) variables
RationalPoly sample_poly() {
    RationalPoly f(2, 1);
    f.add_term({2, 1, 1}, Rational(2));
    f.add_term({0, 1, 0}, Rational(3));
    f.add_term({0, 0, 0}, Rational(-1, 2));
    return f;
}

}  // namespace

TEST_CASE("euler operator acts as v d/dv on monomials") {
    RationalPoly f = sample_poly();
    RationalPoly g = apply_euler({EulerOp::Block::X, 0}, f);
    // x1 d/dx1 scales each monomial by its x1-exponent
    RationalPoly want(2, 1);
    want.add_term({2, 1, 1}, Rational(4));
    CHECK(g == want);

    RationalPoly h = apply_euler({EulerOp::Block::Y, 0}, f);
    RationalPoly want_y(2, 1);
    want_y.add_term({2, 1, 1}, Rational(2));
    CHECK(h == want_y);
}

TEST_CASE("polynomial calculus basics") {
    RationalPoly f = sample_poly();
    RationalPoly df = f.derivative(0);
    RationalPoly want(2, 1);
    want.add_term({1, 1, 1}, Rational(4));
    CHECK(df == want);

    RationalPoly xf = f.times_var(1);
    RationalPoly want2(2, 1);
    want2.add_term({2, 2, 1}, Rational(2));
    want2.add_term({0, 2, 0}, Rational(3));
    want2.add_term({0, 1, 0}, Rational(-1, 2));
    CHECK(xf == want2);

    RationalPoly zero(2, 1);
    zero.add_term({0, 0, 0}, Rational(1));
    zero.add_term({0, 0, 0}, Rational(-1));
    CHECK(zero.is_zero());
}

TEST_CASE("falling block operator equals its derivative expansion") {
    // (-sum_x euler)_k f expanded into monomial-weighted derivatives must
    // agree with direct operator iteration, exactly over the rationals.
    for (int k = 0; k <= 4; ++k) {
        RationalPoly f = sample_poly();
        RationalPoly direct = rising_factorial_op(EulerOp::Block::X, -1, k, f);
        RationalPoly expanded = delta_sum_expansion(f, k);
        CHECK(direct == expanded);
    }
}

TEST_CASE("raising block operator equals its derivative expansion") {
    for (int k = 0; k <= 4; ++k) {
        RationalPoly f = sample_poly();
        RationalPoly direct = rising_factorial_op(EulerOp::Block::Y, 1, k, f);
        RationalPoly expanded = sigma_sum_expansion(f, k);
        CHECK(direct == expanded);
        RationalPoly single = sigma_sum_expansion_single(f, k);
        CHECK(direct == single);
    }
}

TEST_CASE("raising expansion holds with several extra variables") {
    RationalPoly f(1, 2);
    f.add_term({1, 2, 1}, Rational(5, 3));
    f.add_term({0, 0, 3}, Rational(-2));
    f.add_term({2, 1, 0}, Rational(7));
    for (int k = 0; k <= 4; ++k) {
        RationalPoly direct = rising_factorial_op(EulerOp::Block::Y, 1, k, f);
        RationalPoly expanded = sigma_sum_expansion(f, k);
        CHECK(direct == expanded);
    }
}
