#include "hyperfun/decomposition.hpp"
#include "hyperfun/scalar.hpp"
#include "hyperfun/series.hpp"

#include <doctest.h>

#include <cmath>

using namespace hyperfun;

namespace {
const Truncation kDefault{};

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
}  // namespace

TEST_CASE("index bookkeeping for the lattice expansion") {
    CHECK(s_entry_count(2) == 1);
    CHECK(s_entry_count(3) == 3);
    CHECK(s_entry_count(4) == 6);

    SUBCASE("two variables") {
        SMatrix s;
        s.n = 2;
        s.entries = {3};  // s_{22}
        ABPair ab = ab_from_s(s);
        CHECK(ab.A == std::vector<int>{3, 3});
        CHECK(ab.B == std::vector<int>{3, 3});
    }

    SUBCASE("three variables") {
        SMatrix s;
        s.n = 3;
        s.entries = {1, 2, 4};  // s_{22}, s_{23}, s_{33}
        ABPair ab = ab_from_s(s);
        // A_1 = s22 + s23, A_2 = A_3 = s22 + s23 + s33
        CHECK(ab.A == std::vector<int>{3, 7, 7});
        // B_1 = s22 + s23, B_2 = s22 + s33, B_3 = s23 + s33
        CHECK(ab.B == std::vector<int>{3, 5, 6});
    }
}

TEST_CASE("lattice and recursive expansions reproduce the direct series") {
    HaParams p{0.7, {0.3, 0.4}, {0.6, 0.9}};
    for (auto x : std::vector<std::vector<double>>{
             {0.2, 0.25}, {-0.3, 0.15}, {0.1, -0.2}, {-0.25, -0.3}}) {
        double direct = lauricella_fa(p, x, kDefault);
        CHECK(rel_err(fa_decomposed(p, x, kDefault), direct) < 1e-11);
        CHECK(rel_err(fa_recursive(p, x, kDefault), direct) < 1e-11);
        if (x[0] < 0.5 && x[1] < 0.5)
            CHECK(rel_err(fa_decomposed_transformed(p, x, kDefault), direct) < 1e-11);
    }
}

TEST_CASE("three-variable expansions reproduce the direct series") {
    HaParams p{0.6, {0.3, 0.4, 0.2}, {0.7, 0.9, 0.8}};
    for (auto x : std::vector<std::vector<double>>{
             {0.15, 0.2, 0.1}, {-0.2, 0.1, -0.15}}) {
        double direct = lauricella_fa(p, x, kDefault);
        CHECK(rel_err(fa_decomposed(p, x, kDefault), direct) < 1e-11);
        CHECK(rel_err(fa_recursive(p, x, kDefault), direct) < 1e-11);
        CHECK(rel_err(fa_decomposed_transformed(p, x, kDefault), direct) < 1e-11);
    }
}

TEST_CASE("ratio form evaluates far outside the unit polydisk") {
    // For strongly negative arguments the direct series diverges, while the
    // transformed lattice stays inside |w| < 1; compare against the
    // one-variable closed relation 2F1(a, b; c; x) =
    // (1-x)^{-b} 2F1(c-a, b; c; x/(x-1)).
    HaParams p{0.7, {0.3}, {0.6}};
    double x = -5.0;
    double w = x / (x - 1.0);
    double want = std::pow(1.0 - x, -0.3) *
                  gauss_2f1({0.6 - 0.7, 0.3, 0.6, w}, kDefault);
    double via_ratios = fa_from_ratios(p, {w}, {1.0 / (1.0 - x)}, kDefault);
    CHECK(rel_err(via_ratios, want) < 1e-11);
}

TEST_CASE("confluent decomposition splits the extra arguments off") {
    SUBCASE("one variable, frozen reference") {
        HaParams p{0.75, {0.25}, {0.5}};
        EvalPoint pt{{0.2}, {0.3}};
        double got = ha_decomposed(p, pt, kDefault);
        CHECK(rel_err(got, 0.0416190339224604970659564514006) < 1e-10);
        CHECK(rel_err(got, ha_eval(p, pt, kDefault)) < 1e-10);
    }

    SUBCASE("two variables") {
        HaParams p{0.8, {0.3, 0.45}, {0.7, 1.1}};
        EvalPoint pt{{0.15, -0.2}, {0.25}};
        double got = ha_decomposed(p, pt, kDefault);
        CHECK(rel_err(got, ha_eval(p, pt, kDefault)) < 1e-9);
    }

    SUBCASE("negative eta") {
        HaParams p{0.75, {0.25}, {0.5}};
        EvalPoint pt{{0.2}, {-0.4}};
        double got = ha_decomposed(p, pt, kDefault);
        CHECK(rel_err(got, ha_eval(p, pt, kDefault)) < 1e-10);
    }
}

TEST_CASE("gamma quotient identity holds at increasing variable counts") {
    SUBCASE("one variable is exact") {
        auto [sum, closed] = gamma_identity_check(3, {0.25}, kDefault);
        CHECK(sum == 1.0);
        CHECK(closed == 1.0);
    }

    SUBCASE("two variables") {
        for (int m : {3, 4}) {
            auto [sum, closed] = gamma_identity_check(m, {0.2, 0.3}, kDefault);
            CHECK(rel_err(sum, closed) < 1e-8);
        }
    }

    SUBCASE("three variables, high dimension for fast decay") {
        auto [sum, closed] = gamma_identity_check(9, {0.2, 0.3, 0.15}, kDefault);
        CHECK(rel_err(sum, closed) < 1e-8);
    }

    SUBCASE("slow decay is refused rather than silently truncated") {
        CHECK_THROWS_AS(gamma_identity_check(3, {0.2, 0.3, 0.15}, kDefault),
                        ConvergenceError);
    }
}
