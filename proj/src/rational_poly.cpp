#include "hyperfun/rational_poly.hpp"

namespace hyperfun {

namespace {

Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational v = 1;
    for (int i = 0; i < k; ++i) {
        v *= (n - i);
        v /= (i + 1);
    }
    return v;
}

}  // namespace

void RationalPoly::add_term(const std::vector<int>& exponents, const Rational& coeff) {
    if (static_cast<int>(exponents.size()) != vars())
        throw ValidationError("RationalPoly: exponent vector length mismatch");
    for (int e : exponents)
        if (e < 0) throw ValidationError("RationalPoly: negative exponent");
    if (coeff == 0) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& other) {
    if (nx_ != other.nx_ || ny_ != other.ny_)
        throw ValidationError("RationalPoly: variable layout mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

RationalPoly RationalPoly::scaled(const Rational& s) const {
    RationalPoly out(nx_, ny_);
    if (s == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

RationalPoly RationalPoly::derivative(int var) const {
    if (var < 0 || var >= vars())
        throw ValidationError("RationalPoly: variable index out of range");
    RationalPoly out(nx_, ny_);
    for (const auto& [e, c] : terms_) {
        int p = e[static_cast<size_t>(var)];
        if (p == 0) continue;
        std::vector<int> e2 = e;
        e2[static_cast<size_t>(var)] -= 1;
        out.add_term(e2, c * p);
    }
    return out;
}

RationalPoly RationalPoly::times_var(int var) const {
    if (var < 0 || var >= vars())
        throw ValidationError("RationalPoly: variable index out of range");
    RationalPoly out(nx_, ny_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2 = e;
        e2[static_cast<size_t>(var)] += 1;
        out.terms_.emplace(std::move(e2), c);
    }
    return out;
}

RationalPoly apply_euler(const EulerOp& op, const RationalPoly& f) {
    int var = (op.block == EulerOp::Block::X) ? op.index : f.nx() + op.index;
    int limit = (op.block == EulerOp::Block::X) ? f.nx() : f.ny();
    if (op.index < 0 || op.index >= limit)
        throw ValidationError("apply_euler: operator index out of range");
    return f.derivative(var).times_var(var);
}

RationalPoly rising_factorial_op(EulerOp::Block block, int sign, int k,
                                 const RationalPoly& f) {
    if (k < 0) throw ValidationError("rising_factorial_op: negative order");
    if (sign != 1 && sign != -1)
        throw ValidationError("rising_factorial_op: sign must be +1 or -1");
    int count = (block == EulerOp::Block::X) ? f.nx() : f.ny();
    RationalPoly g = f;
    for (int t = 0; t < k; ++t) {
        RationalPoly next = g.scaled(t);
        for (int v = 0; v < count; ++v)
            next += apply_euler({block, v}, g).scaled(sign);
        g = std::move(next);
    }
    return g;
}

namespace {

RationalPoly weighted_mixed_derivative(const RationalPoly& f,
                                       const std::vector<int>& orders, int offset,
                                       const Rational& coeff) {
    RationalPoly g = f;
    for (int v = 0; v < static_cast<int>(orders.size()); ++v)
        for (int rep = 0; rep < orders[static_cast<size_t>(v)]; ++rep)
            g = g.derivative(offset + v);
    for (int v = 0; v < static_cast<int>(orders.size()); ++v)
        for (int rep = 0; rep < orders[static_cast<size_t>(v)]; ++rep)
            g = g.times_var(offset + v);
    return g.scaled(coeff);
}

}  // namespace

RationalPoly delta_sum_expansion(const RationalPoly& f, int k) {
    if (k < 0) throw ValidationError("delta_sum_expansion: negative order");
    RationalPoly out(f.nx(), f.ny());
    Rational lead = factorial(k);
    if (k % 2 != 0) lead = -lead;
    std::vector<int> ivec(static_cast<size_t>(f.nx()), 0);
    ivec[0] = k;
    while (true) {
        Rational co = lead;
        for (int e : ivec) co /= factorial(e);
        out += weighted_mixed_derivative(f, ivec, 0, co);
        if (!next_composition(ivec)) break;
    }
    return out;
}

RationalPoly sigma_sum_expansion(const RationalPoly& f, int k) {
    if (k < 0) throw ValidationError("sigma_sum_expansion: negative order");
    if (k == 0) return f;
    RationalPoly out(f.nx(), f.ny());
    Rational kfac = factorial(k);
    for (int l = 1; l <= k; ++l) {
        Rational cb = binomial(k - 1, l - 1) * kfac;
        std::vector<int> jvec(static_cast<size_t>(f.ny()), 0);
        jvec[0] = l;
        while (true) {
            Rational co = cb;
            for (int e : jvec) co /= factorial(e);
            out += weighted_mixed_derivative(f, jvec, f.nx(), co);
            if (!next_composition(jvec)) break;
        }
    }
    return out;
}

RationalPoly sigma_sum_expansion_single(const RationalPoly& f, int k) {
    if (f.ny() != 1)
        throw ValidationError("sigma_sum_expansion_single: requires one y variable");
    if (k < 0) throw ValidationError("sigma_sum_expansion_single: negative order");
    if (k == 0) return f;
    RationalPoly out(f.nx(), f.ny());
    for (int l = 1; l <= k; ++l) {
        Rational co = factorial(k) * factorial(k - 1) /
                      (factorial(l) * factorial(l - 1) * factorial(k - l));
        out += weighted_mixed_derivative(f, {l}, f.nx(), co);
    }
    return out;
}

}  // namespace hyperfun
