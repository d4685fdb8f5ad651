#include "hyperfun/series.hpp"

#include <cmath>

namespace hyperfun {

namespace {

constexpr double kScaleFloor = 1e-300;

void require_xi_domain(double xi_abs_sum) {
    if (xi_abs_sum >= 1.0)
        throw DomainError("series: sum of |xi| must be below 1, got " +
                          std::to_string(xi_abs_sum));
}

void reject_degenerate_a(double a, const std::vector<double>& eta) {
    bool eta_active = false;
    for (double e : eta)
        if (e != 0.0) eta_active = true;
    if (!eta_active) return;
    double r = std::round(a);
    if (r >= 1.0 && std::abs(a - r) < 1e-9)
        throw PoleError(
            "series: parameter a at or within 1e-9 of a positive integer is "
            "rejected when any eta is nonzero");
}

// Table of combined per-variable factors f[m] = (b)_m / ((c)_m m!) * x^m.
std::vector<double> xi_factor_table(double b, double c, double x, int order) {
    std::vector<double> f(static_cast<size_t>(order) + 1);
    f[0] = 1.0;
    for (int m = 0; m < order; ++m)
        f[static_cast<size_t>(m) + 1] =
            f[static_cast<size_t>(m)] * (b + m) / ((c + m) * (m + 1)) * x;
    return f;
}

// Table e[q] = x^q / q!.
std::vector<double> exp_factor_table(double x, int order) {
    std::vector<double> f(static_cast<size_t>(order) + 1);
    f[0] = 1.0;
    for (int q = 0; q < order; ++q)
        f[static_cast<size_t>(q) + 1] = f[static_cast<size_t>(q)] * x / (q + 1);
    return f;
}

// Two-sided Pochhammer table for the leading parameter: entry [order + s]
// holds (a)_s for s in [-order, order]. The negative side is only built when
// needed and reports a pole if a is a positive integer small enough to hit it.
struct LeadingTable {
    std::vector<double> vals;
    int order;

    double at(int s) const { return vals[static_cast<size_t>(order + s)]; }
};

LeadingTable leading_table(double a, int order, bool negative_side) {
    LeadingTable tab;
    tab.order = order;
    tab.vals.assign(2 * static_cast<size_t>(order) + 1, 0.0);
    tab.vals[static_cast<size_t>(order)] = 1.0;
    for (int s = 0; s < order; ++s)
        tab.vals[static_cast<size_t>(order + s) + 1] =
            tab.vals[static_cast<size_t>(order + s)] * (a + s);
    if (negative_side) {
        for (int s = 1; s <= order; ++s) {
            double factor = a - s;
            if (factor == 0.0)
                throw PoleError("series: (a)_{-s} pole, a = " + std::to_string(a));
            tab.vals[static_cast<size_t>(order - s)] =
                tab.vals[static_cast<size_t>(order - s) + 1] / factor;
        }
    }
    return tab;
}

// Shared shell-summation core for the confluent function. eta may be empty.
double confluent_shells(double a, const std::vector<double>& b,
                        const std::vector<double>& c,
                        const std::vector<double>& xi,
                        const std::vector<double>& eta, const Truncation& t) {
    int n = static_cast<int>(xi.size());
    int p = static_cast<int>(eta.size());
    int dims = n + p;
    int order = t.max_total_order;

    std::vector<std::vector<double>> xf;
    xf.reserve(static_cast<size_t>(n));
    for (int l = 0; l < n; ++l)
        xf.push_back(xi_factor_table(b[static_cast<size_t>(l)],
                                     c[static_cast<size_t>(l)],
                                     xi[static_cast<size_t>(l)], order));
    std::vector<std::vector<double>> ef;
    ef.reserve(static_cast<size_t>(p));
    for (int j = 0; j < p; ++j)
        ef.push_back(exp_factor_table(eta[static_cast<size_t>(j)], order));

    LeadingTable pa = leading_table(a, order, p > 0);

    CompensatedSum<double> acc;
    std::vector<int> idx(static_cast<size_t>(dims));
    int small_streak = 0;
    for (int total = 0; total <= order; ++total) {
        std::fill(idx.begin(), idx.end(), 0);
        idx[0] = total;
        CompensatedSum<double> shell;
        while (true) {
            double factor = 1.0;
            int mq = 0;
            for (int l = 0; l < n; ++l) {
                int m = idx[static_cast<size_t>(l)];
                factor *= xf[static_cast<size_t>(l)][static_cast<size_t>(m)];
                mq += m;
            }
            for (int j = 0; j < p; ++j) {
                int q = idx[static_cast<size_t>(n + j)];
                factor *= ef[static_cast<size_t>(j)][static_cast<size_t>(q)];
                mq -= q;
            }
            if (factor != 0.0) shell.add(pa.at(mq) * factor);
            if (!next_composition(idx)) break;
        }
        acc.add(shell.value());
        double scale = std::max(std::abs(acc.value()), kScaleFloor);
        if (std::abs(shell.value()) <= t.rel_tol * scale) {
            if (++small_streak >= 3) return acc.value();
        } else {
            small_streak = 0;
        }
    }
    throw ConvergenceError(
        "series: shell sum did not converge within max total order " +
        std::to_string(order));
}

}  // namespace

double lauricella_fa(const HaParams& params, const std::vector<double>& x,
                     const Truncation& t) {
    params.validate();
    if (static_cast<int>(x.size()) != params.n())
        throw ValidationError("lauricella_fa: argument count mismatch");
    double s = 0;
    for (double v : x) s += std::abs(v);
    require_xi_domain(s);
    return confluent_shells(params.a, params.b, params.c, x, {}, t);
}

EvalPoint ha_reduce_eta(const EvalPoint& pt) {
    EvalPoint out;
    out.xi = pt.xi;
    if (!pt.eta.empty()) {
        double s = 0;
        for (double e : pt.eta) s += e;
        out.eta = {s};
    }
    return out;
}

double ha_eval(const HaParams& params, const EvalPoint& pt, const Truncation& t) {
    params.validate();
    if (pt.n() != params.n())
        throw ValidationError("ha_eval: xi count mismatch");
    require_xi_domain(pt.xi_abs_sum());
    reject_degenerate_a(params.a, pt.eta);
    EvalPoint reduced = ha_reduce_eta(pt);
    if (!reduced.eta.empty() && reduced.eta[0] == 0.0) reduced.eta.clear();
    return confluent_shells(params.a, params.b, params.c, reduced.xi, reduced.eta, t);
}

double ha_eval_direct(const HaParams& params, const EvalPoint& pt,
                      const Truncation& t) {
    params.validate();
    if (pt.n() != params.n())
        throw ValidationError("ha_eval_direct: xi count mismatch");
    require_xi_domain(pt.xi_abs_sum());
    reject_degenerate_a(params.a, pt.eta);
    return confluent_shells(params.a, params.b, params.c, pt.xi, pt.eta, t);
}

double erdelyi_h(const ErdelyiParams& params, const EvalPoint& pt,
                 const Truncation& t) {
    params.validate();
    if (pt.n() != params.n() || pt.p() != params.p())
        throw ValidationError("erdelyi_h: argument count mismatch");
    require_xi_domain(pt.xi_abs_sum());
    reject_degenerate_a(params.a, pt.eta);

    int n = params.n();
    int p = params.p();
    int order = t.max_total_order;

    std::vector<std::vector<double>> xf;
    for (int l = 0; l < n; ++l)
        xf.push_back(xi_factor_table(params.b[static_cast<size_t>(l)],
                                     params.c[static_cast<size_t>(l)],
                                     pt.xi[static_cast<size_t>(l)], order));
    // Eta factors carry two rising factorials and no lower parameter:
    // h[q] = (b_{n+j})_q (d_j)_q eta^q / q!.
    std::vector<std::vector<double>> hf;
    for (int j = 0; j < p; ++j) {
        std::vector<double> f(static_cast<size_t>(order) + 1);
        f[0] = 1.0;
        double bj = params.b[static_cast<size_t>(n + j)];
        double dj = params.d[static_cast<size_t>(j)];
        double ej = pt.eta[static_cast<size_t>(j)];
        for (int q = 0; q < order; ++q)
            f[static_cast<size_t>(q) + 1] =
                f[static_cast<size_t>(q)] * (bj + q) * (dj + q) / (q + 1) * ej;
        hf.push_back(std::move(f));
    }

    bool eta_active = false;
    for (double e : pt.eta)
        if (e != 0.0) eta_active = true;
    LeadingTable pa = leading_table(params.a, order, eta_active);

    CompensatedSum<double> acc;
    std::vector<int> idx(static_cast<size_t>(n + p));
    int small_streak = 0;
    int stall_streak = 0;
    double prev_shell_mag = -1.0;
    for (int total = 0; total <= order; ++total) {
        std::fill(idx.begin(), idx.end(), 0);
        idx[0] = total;
        CompensatedSum<double> shell;
        while (true) {
            double factor = 1.0;
            int mq = 0;
            for (int l = 0; l < n; ++l) {
                int m = idx[static_cast<size_t>(l)];
                factor *= xf[static_cast<size_t>(l)][static_cast<size_t>(m)];
                mq += m;
            }
            for (int j = 0; j < p; ++j) {
                int q = idx[static_cast<size_t>(n + j)];
                factor *= hf[static_cast<size_t>(j)][static_cast<size_t>(q)];
                mq -= q;
            }
            if (factor != 0.0) shell.add(pa.at(mq) * factor);
            if (!next_composition(idx)) break;
        }
        acc.add(shell.value());
        double scale = std::max(std::abs(acc.value()), kScaleFloor);
        double mag = std::abs(shell.value());
        if (mag <= t.rel_tol * scale) {
            if (++small_streak >= 3) return acc.value();
            stall_streak = 0;
        } else {
            small_streak = 0;
            // The parent series converges only conditionally; shells that stop
            // contracting signal divergence long before the order cap.
            if (prev_shell_mag > 0.0 && mag >= 0.9 * prev_shell_mag) {
                if (++stall_streak >= 3)
                    throw ConvergenceError(
                        "erdelyi_h: shell magnitudes fail to contract; argument "
                        "outside the convergence region");
            } else {
                stall_streak = 0;
            }
        }
        prev_shell_mag = mag;
    }
    throw ConvergenceError("erdelyi_h: shell sum did not converge within max total order");
}

}  // namespace hyperfun
