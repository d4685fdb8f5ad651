// Core value types, error taxonomy, truncation control, multi-index iteration.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperfun {

// ---------------------------------------------------------------------------
// Errors.
// Every failure is an exception derived from Error so callers (CLI, tests)
// can map them to exit codes uniformly.

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input structure: wrong sizes, out-of-range parameters, bad config.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A Gamma/Pochhammer pole was hit.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Series failed to reach the requested tolerance within its caps.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// ---------------------------------------------------------------------------
// Series truncation control.
//
// rel_tol:          target relative tolerance; summation stops after three
//                   consecutive shells (or terms) each below rel_tol times
//                   the accumulated magnitude
// max_total_order:  cap on the total degree of multivariate shell summation
// term_cap:         cap on the number of terms of one-dimensional series
// outer_max_order:  cap on the outer index of decomposition expansions

struct Truncation {
    // The shell cap covers the slowest series the evaluation router will
    // hand to the direct sum, which occurs at xi magnitude sums near 0.7.
    double rel_tol = 1e-12;
    int max_total_order = 96;
    int term_cap = 10000;
    int outer_max_order = 24;
    // Relative error budget for extrapolated tail corrections in slowly
    // converging continuations. Zero keeps evaluation strict: a continuation
    // that cannot meet rel_tol within its caps raises ConvergenceError
    // instead of returning an extrapolated value.
    double tail_budget = 0.0;
};

// ---------------------------------------------------------------------------
// Compensated (Neumaier) accumulator; deterministic for a fixed add order.

template <typename T>
struct CompensatedSum {
    T sum = T(0);
    T comp = T(0);

    void add(T x) {
        T t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    T value() const { return sum + comp; }
};

// ---------------------------------------------------------------------------
// Multi-indices.

struct MultiIndex {
    std::vector<int> components;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> c) : components(std::move(c)) {}

    int total() const {
        int t = 0;
        for (int v : components) t += v;
        return t;
    }
};

// Streams every multi-index of dimension `dim` with total <= max_total, in
// nondecreasing total order; within a shell the first component descends
// (so for dim=2, total=1 the order is (1,0), (0,1)).
class MultiIndexStream {
public:
    MultiIndexStream(int dim, int max_total);

    // Writes the next index into `out`; returns false when exhausted.
    bool next(std::vector<int>& out);
    bool next(MultiIndex& out);

    // Total of the index most recently produced.
    int current_total() const { return total_; }

private:
    int dim_;
    int max_total_;
    int total_;
    bool shell_fresh_;
    bool done_;
    std::vector<int> comp_;

    bool advance_within_shell();
};

// Materialized convenience form of the stream.
std::vector<MultiIndex> iterate_multi_indices(int dim, int max_total);

// Advances a composition of fixed total in the same descending-first order
// the stream uses; returns false once all weight sits in the last slot.
bool next_composition(std::vector<int>& comp);

// ---------------------------------------------------------------------------
// Parameter and argument records.

// Parameters (a; b_1..b_n; c_1..c_n) shared by the n-variable complete
// function and the confluent function.
struct HaParams {
    double a = 0.0;
    std::vector<double> b;
    std::vector<double> c;

    int n() const { return static_cast<int>(b.size()); }
    void validate() const;
};

// Argument record (xi_1..xi_n; eta_1..eta_p).
struct EvalPoint {
    std::vector<double> xi;
    std::vector<double> eta;

    int n() const { return static_cast<int>(xi.size()); }
    int p() const { return static_cast<int>(eta.size()); }
    double xi_abs_sum() const {
        double s = 0;
        for (double v : xi) s += std::abs(v);
        return s;
    }
};

// Parameters of the parent (n+p)-variable function: a; b_1..b_{n+p};
// d_1..d_p; c_1..c_n.
struct ErdelyiParams {
    double a = 0.0;
    std::vector<double> b;
    std::vector<double> d;
    std::vector<double> c;

    int n() const { return static_cast<int>(c.size()); }
    int p() const { return static_cast<int>(d.size()); }
    void validate() const;
};

}  // namespace hyperfun
