#include "hyperfun/decomposition.hpp"
#include "hyperfun/helmholtz.hpp"
#include "hyperfun/scalar.hpp"
#include "hyperfun/series.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <string>

using namespace hyperfun;
using nlohmann::json;

namespace {

const Truncation kDefault{};

double tolerance_for(const std::string& function) {
    if (function == "gamma" || function == "zero_f_one") return 1e-13;
    if (function == "qk") return 1e-11;
    return 1e-12;
}

double evaluate(const json& rec) {
    const std::string function = rec.at("function");
    const json& params = rec.at("params");
    std::vector<double> point = rec.at("point").get<std::vector<double>>();

    if (function == "gamma") return gamma_value(params.at("x").get<double>());
    if (function == "gauss_2f1")
        return gauss_2f1({params.at("a").get<double>(), params.at("b").get<double>(),
                          params.at("c").get<double>(), point.at(0)},
                         kDefault);
    if (function == "zero_f_one")
        return zero_f_one(params.at("d").get<double>(), point.at(0), kDefault);
    if (function == "lauricella_fa") {
        HaParams p{params.at("a").get<double>(),
                   params.at("b").get<std::vector<double>>(),
                   params.at("c").get<std::vector<double>>()};
        return lauricella_fa(p, point, kDefault);
    }
    if (function == "ha") {
        HaParams p{params.at("a").get<double>(),
                   params.at("b").get<std::vector<double>>(),
                   params.at("c").get<std::vector<double>>()};
        int np = p.n();
        EvalPoint pt;
        pt.xi.assign(point.begin(), point.begin() + np);
        pt.eta.assign(point.begin() + np, point.end());
        double collapsed = ha_eval(p, pt, kDefault);
        double direct = ha_eval_direct(p, pt, kDefault);
        CHECK(std::abs(collapsed - direct) <=
              1e-12 * std::max(1.0, std::abs(collapsed)));
        return collapsed;
    }
    if (function == "erdelyi") {
        ErdelyiParams p{params.at("a").get<double>(),
                        params.at("b").get<std::vector<double>>(),
                        params.at("d").get<std::vector<double>>(),
                        params.at("c").get<std::vector<double>>()};
        size_t np = p.c.size();
        EvalPoint pt;
        pt.xi.assign(point.begin(), point.begin() + static_cast<long>(np));
        pt.eta.assign(point.begin() + static_cast<long>(np), point.end());
        return erdelyi_h(p, pt, kDefault);
    }
    if (function == "qk") {
        SingularConfig cfg;
        cfg.m = params.at("m").get<int>();
        cfg.n = params.at("n").get<int>();
        cfg.alpha = params.at("alpha").get<std::vector<double>>();
        cfg.lambda_sq = params.at("lambda_sq").get<std::vector<double>>();
        PointPair pp{point, params.at("x0").get<std::vector<double>>()};
        return fundamental_solution(cfg, pp, params.at("k").get<int>(), kDefault);
    }
    FAIL("unknown fixture function ", function);
    return 0.0;
}

}  // namespace

TEST_CASE("production evaluators reproduce the frozen reference table") {
    std::ifstream in(HYPERFUN_FIXTURES_PATH);
    REQUIRE_MESSAGE(in.good(), "missing fixtures at " HYPERFUN_FIXTURES_PATH);

    int checked = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line);
        const std::string function = rec.at("function");
        double want = std::stod(rec.at("value").get<std::string>());
        CAPTURE(function);
        CAPTURE(rec.at("point").dump());

        double got = evaluate(rec);
        double tol = tolerance_for(function);
        double denom = std::max(std::abs(want), 1e-300);
        CHECK_MESSAGE(std::abs(got - want) / denom < tol,
                      "got ", got, " want ", want, " rel ",
                      std::abs(got - want) / denom);
        ++checked;
    }
    CHECK(checked >= 25);
}
