#include "hyperfun/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace hyperfun;

namespace {
const Truncation kDefault{};
}

TEST_CASE("system residuals vanish for every family member") {
    HaParams p{1.1, {0.3, 0.45}, {0.6, 0.9}};
    EvalPoint pt{{-0.15, 0.2}, {0.1, 0.25}};
    for (int k = 0; k <= 2; ++k) {
        auto reports = hypergeometric_system_residual(p, pt, k, kDefault);
        REQUIRE(reports.size() == 4);
        for (const auto& r : reports) {
            CHECK(r.scale > 0.0);
            CHECK(r.relative() < 1e-9);
        }
    }
}

TEST_CASE("system residual report bookkeeping") {
    HaParams p{1.1, {0.3, 0.45}, {0.6, 0.9}};
    EvalPoint pt{{-0.15, 0.2}, {0.1, 0.25}};
    auto reports = hypergeometric_system_residual(p, pt, 0, kDefault);
    for (const auto& r : reports) {
        CHECK(r.point.size() == 4);
        CHECK(r.relative() == std::abs(r.residual) / r.scale);
    }
    CHECK_THROWS_AS(hypergeometric_system_residual(p, pt, 3, kDefault),
                    ValidationError);
    CHECK_THROWS_AS(hypergeometric_system_residual(p, pt, -1, kDefault),
                    ValidationError);
}

TEST_CASE("substitution residuals vanish along the geometric pullback") {
    SingularConfig cfg;
    cfg.m = 4;
    cfg.n = 2;
    cfg.alpha = {0.2, 0.3};
    cfg.lambda_sq = {0.7};
    PointPair pt{{0.3, 0.4, 1.2, 0.9}, {0.35, 0.3, 0.2, 0.1}};
    for (int k = 0; k <= 2; ++k) {
        auto reports = substitution_system_residual(cfg, pt, k, kDefault);
        REQUIRE(reports.size() == 3);
        for (const auto& r : reports) CHECK(r.relative() < 1e-9);
    }
}

TEST_CASE("difference stencil is exact for quadratics without drift terms") {
    SingularConfig cfg;
    cfg.m = 3;
    cfg.n = 1;
    cfg.alpha = {0.25};
    cfg.lambda_sq = {0.0};
    // u = x2^2 has Laplacian 2 and zero singular-drift contribution, so the
    // residual equals 2 exactly (up to stencil round-off)
    auto u = [](const std::vector<double>& x) { return x[1] * x[1]; };
    ResidualReport r = helmholtz_residual(cfg, u, {0.5, 0.4, 0.3}, 1e-3);
    CHECK(std::abs(r.residual - 2.0) < 1e-6);
    CHECK(r.step == 1e-3);
}

TEST_CASE("difference residual vanishes on the fundamental solution") {
    SingularConfig cfg;
    cfg.m = 3;
    cfg.n = 1;
    cfg.alpha = {0.25};
    cfg.lambda_sq = {1.0};
    std::vector<double> x0 = {0.4, 0.5, 0.6};
    auto u = [&](const std::vector<double>& x) {
        return fundamental_solution(cfg, {x, x0}, 1, kDefault);
    };
    ResidualReport r = helmholtz_residual(cfg, u, {0.55, 0.62, 0.4}, 1e-4);
    CHECK(r.relative() < 1e-5);
    CHECK(r.order_estimate > 1.7);
    CHECK(r.order_estimate < 2.3);
}

TEST_CASE("difference residual flags a non-solution") {
    SingularConfig cfg;
    cfg.m = 3;
    cfg.n = 1;
    cfg.alpha = {0.25};
    cfg.lambda_sq = {1.0};
    // r^{-1} solves the plain Laplace equation, not this singular one
    std::vector<double> x0 = {0.4, 0.5, 0.6};
    auto u = [&](const std::vector<double>& x) {
        double s = 0.0;
        for (int i = 0; i < 3; ++i) s += (x[i] - x0[i]) * (x[i] - x0[i]);
        return 1.0 / std::sqrt(s);
    };
    ResidualReport r = helmholtz_residual(cfg, u, {0.55, 0.62, 0.4}, 1e-4);
    CHECK(r.relative() > 1e-3);
}

TEST_CASE("stencil refuses to cross the singular boundary") {
    SingularConfig cfg;
    cfg.m = 3;
    cfg.n = 1;
    cfg.alpha = {0.25};
    cfg.lambda_sq = {0.0};
    auto u = [](const std::vector<double>&) { return 1.0; };
    CHECK_THROWS_AS(helmholtz_residual(cfg, u, {0.001, 0.4, 0.3}, 1e-3),
                    DomainError);
}
