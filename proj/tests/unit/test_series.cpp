#include "hyperfun/series.hpp"
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

TEST_CASE("one-variable complete series reduces to the gauss function") {
    HaParams p{0.7, {0.3}, {0.6}};
    for (double x : {-0.6, -0.2, 0.15, 0.5}) {
        double got = lauricella_fa(p, {x}, kDefault);
        double want = gauss_2f1({0.7, 0.3, 0.6, x}, kDefault);
        CHECK(rel_err(got, want) < 1e-13);
    }
}

TEST_CASE("complete series matches frozen high-precision references") {
    HaParams p2{0.7, {0.3, 0.4}, {0.6, 0.9}};
    double got2 = lauricella_fa(p2, {0.2, 0.25}, kDefault);
    CHECK(rel_err(got2, 1.19774181973037585581094658833) < 1e-12);

    HaParams p3{0.6, {0.3, 0.4, 0.2}, {0.7, 0.9, 0.8}};
    double got3 = lauricella_fa(p3, {0.15, 0.2, 0.1}, kDefault);
    CHECK(rel_err(got3, 1.13288781196853357291877938393) < 1e-12);
}

TEST_CASE("confluent series matches its frozen reference") {
    HaParams p{0.75, {0.25}, {0.5}};
    double got = ha_eval(p, {{0.2}, {0.3}}, kDefault);
    CHECK(rel_err(got, 0.0416190339224604970659564514006) < 1e-12);
}

TEST_CASE("confluent series at empty eta equals the complete series") {
    HaParams p{0.7, {0.3, 0.4}, {0.6, 0.9}};
    double via_ha = ha_eval(p, {{0.2, 0.25}, {}}, kDefault);
    double via_fa = lauricella_fa(p, {0.2, 0.25}, kDefault);
    CHECK(rel_err(via_ha, via_fa) < 1e-14);
}

TEST_CASE("extra exponential arguments collapse onto their sum") {
    HaParams p{0.75, {0.25}, {0.5}};
    double collapsed = ha_eval(p, {{0.2}, {0.3}}, kDefault);

    EvalPoint two{{0.2}, {0.1, 0.2}};
    CHECK(rel_err(ha_eval(p, two, kDefault), collapsed) < 1e-14);
    CHECK(rel_err(ha_eval_direct(p, two, kDefault), collapsed) < 1e-12);

    EvalPoint three{{0.2}, {0.35, -0.15, 0.1}};
    CHECK(rel_err(ha_eval(p, three, kDefault), collapsed) < 1e-14);
    CHECK(rel_err(ha_eval_direct(p, three, kDefault), collapsed) < 1e-12);
}

TEST_CASE("eta reduction keeps xi and sums eta") {
    EvalPoint pt{{0.2, -0.1}, {0.3, 0.4, -0.2}};
    EvalPoint red = ha_reduce_eta(pt);
    CHECK(red.xi == pt.xi);
    REQUIRE(red.eta.size() == 1);
    CHECK(red.eta[0] == doctest::Approx(0.5).epsilon(1e-15));

    EvalPoint none{{0.2}, {}};
    CHECK(ha_reduce_eta(none).eta.empty());
}

TEST_CASE("degenerate integer parameter is rejected with nonzero eta") {
    HaParams p{2.0, {0.25}, {0.5}};
    CHECK_THROWS_AS(ha_eval(p, {{0.2}, {0.3}}, kDefault), PoleError);
    // with eta = 0 the same parameter is harmless
    CHECK_NOTHROW(ha_eval(p, {{0.2}, {0.0}}, kDefault));
}

TEST_CASE("series rejects points outside the convergence domain") {
    HaParams p{0.7, {0.3, 0.4}, {0.6, 0.9}};
    CHECK_THROWS_AS(lauricella_fa(p, {0.7, 0.5}, kDefault), DomainError);
    CHECK_THROWS_AS(ha_eval(p, {{0.7, 0.5}, {}}, kDefault), DomainError);
}

TEST_CASE("two-parameter parent series agrees with the complete series at eta zero") {
    ErdelyiParams ep{0.7, {0.3, 0.4}, {}, {0.6, 0.9}};
    HaParams p{0.7, {0.3, 0.4}, {0.6, 0.9}};
    double lhs = erdelyi_h(ep, {{0.2, 0.25}, {}}, kDefault);
    double rhs = lauricella_fa(p, {0.2, 0.25}, kDefault);
    CHECK(rel_err(lhs, rhs) < 1e-14);
}

TEST_CASE("parent series detects divergent eta growth") {
    // large b d eta product grows without bound: the engine must refuse
    ErdelyiParams ep{0.7, {0.3}, {50.0}, {0.6}};
    ep.b.push_back(50.0);
    CHECK_THROWS_AS(erdelyi_h(ep, {{0.2}, {1.5}}, kDefault), ConvergenceError);
}
