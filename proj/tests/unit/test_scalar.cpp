#include "hyperfun/scalar.hpp"

#include <doctest.h>

#include <cmath>

using namespace hyperfun;

namespace {
const Truncation kDefault{};

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
}  // namespace

TEST_CASE("log_gamma matches known values and signs") {
    CHECK(rel_err(gamma_value(0.5), std::sqrt(M_PI)) < 1e-14);
    CHECK(rel_err(gamma_value(5.0), 24.0) < 1e-14);
    CHECK(rel_err(gamma_value(1.0), 1.0) < 1e-15);

    LogGamma g = log_gamma(-0.5);
    CHECK(g.sign == -1);
    CHECK(rel_err(std::exp(g.log_abs), 2.0 * std::sqrt(M_PI)) < 1e-13);

    LogGamma g2 = log_gamma(-1.5);
    CHECK(g2.sign == 1);
    CHECK(rel_err(std::exp(g2.log_abs), 4.0 * std::sqrt(M_PI) / 3.0) < 1e-13);

    CHECK_THROWS_AS(log_gamma(0.0), PoleError);
    CHECK_THROWS_AS(log_gamma(-3.0), PoleError);
}

TEST_CASE("pochhammer handles both directions and the empty product") {
    CHECK(pochhammer(7.3, 0) == 1.0);
    CHECK(pochhammer(0.0, 0) == 1.0);
    CHECK(rel_err(pochhammer(0.5, 3), 0.5 * 1.5 * 2.5) < 1e-15);
    CHECK(rel_err(pochhammer(-2.5, 2), (-2.5) * (-1.5)) < 1e-15);
    // (a)_{-k} = 1 / ((a-k)_k)
    CHECK(rel_err(pochhammer(5.0, -2), 1.0 / (3.0 * 4.0)) < 1e-15);
    CHECK(rel_err(pochhammer(0.75, -1), 1.0 / (-0.25)) < 1e-15);
    CHECK_THROWS_AS(pochhammer(2.0, -2), PoleError);
    CHECK(pochhammer(0.0, 2) == 0.0);
}

TEST_CASE("gauss series reproduces closed forms inside the disk") {
    Truncation tight = kDefault;
    tight.rel_tol = 1e-15;
    for (double x : {-0.7, -0.25, 0.1, 0.4, 0.8}) {
        double got = gauss_2f1({1.0, 1.0, 2.0, x}, tight);
        double want = -std::log1p(-x) / x;
        CHECK(rel_err(got, want) < 1e-13);
    }
    // (1-x)^{-a} via the binomial case
    double got = gauss_2f1({0.3, 0.9, 0.9, 0.5}, tight);
    CHECK(rel_err(got, std::pow(0.5, -0.3)) < 1e-13);
}

TEST_CASE("gauss near-unity branch agrees with the Euler transform") {
    // 2F1(a, b; c; x) = (1-x)^{c-a-b} 2F1(c-a, c-b; c; x); the right-hand
    // side converges comfortably at x = 0.9 for these parameters.
    double a = 0.3, b = 0.4, c = 2.6, x = 0.9;
    double lhs = gauss_2f1({a, b, c, x}, kDefault);
    double rhs = std::pow(1.0 - x, c - a - b) *
                 gauss_2f1({c - a, c - b, c, x}, kDefault);
    CHECK(rel_err(lhs, rhs) < 1e-11);
}

TEST_CASE("gauss value at unity matches the gamma quotient") {
    double a = 0.3, b = 0.4, c = 3.7;
    double want = std::exp(log_gamma(c).log_abs + log_gamma(c - a - b).log_abs -
                           log_gamma(c - a).log_abs - log_gamma(c - b).log_abs);
    CHECK(rel_err(gauss_sum_at_unity(a, b, c), want) < 1e-14);
    CHECK(rel_err(gauss_2f1({a, b, c, 1.0}, kDefault), want) < 1e-14);
    CHECK_THROWS_AS(gauss_sum_at_unity(1.0, 2.0, 2.5), DomainError);
}

TEST_CASE("gauss rejects arguments outside the closed disk and c poles") {
    CHECK_THROWS_AS(gauss_2f1({0.3, 0.4, 0.9, 1.5}, kDefault), DomainError);
    CHECK_THROWS_AS(gauss_2f1({0.3, 0.4, -2.0, 0.5}, kDefault), PoleError);
    CHECK(gauss_2f1({0.3, 0.4, 0.9, 0.0}, kDefault) == 1.0);
    // terminating series: a = -2 gives a quadratic, fine even at x > 1
    double got = gauss_2f1({-2.0, 0.5, 1.5, 2.0}, kDefault);
    double want = 1.0 - 2.0 * 0.5 / 1.5 * 2.0 +
                  (-2.0) * (-1.0) / 2.0 * (0.5 * 1.5) / (1.5 * 2.5) * 4.0;
    CHECK(rel_err(got, want) < 1e-14);
}

TEST_CASE("confluent limit series matches cosine and sinc forms") {
    // 0F1(; 1/2; -z^2/4) = cos z, 0F1(; 3/2; -z^2/4) = sin z / z
    double z = 1.3;
    CHECK(rel_err(zero_f_one(0.5, -z * z / 4.0, kDefault), std::cos(z)) < 1e-14);
    CHECK(rel_err(zero_f_one(1.5, -z * z / 4.0, kDefault), std::sin(z) / z) < 1e-14);
    CHECK_THROWS_AS(zero_f_one(-1.0, 0.3, kDefault), PoleError);
}

TEST_CASE("multi-argument confluent series collapses to the sum") {
    ZeroFpParams p;
    p.denominator = 0.7;
    p.args = {0.1, -0.25, 0.05};
    double collapsed = zero_f_one(0.7, 0.1 - 0.25 + 0.05, kDefault);
    CHECK(rel_err(zero_f_p(p, kDefault), collapsed) < 1e-15);
}
