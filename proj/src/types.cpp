#include "hyperfun/types.hpp"

#include <cmath>

namespace hyperfun {

MultiIndexStream::MultiIndexStream(int dim, int max_total)
    : dim_(dim), max_total_(max_total), total_(0), shell_fresh_(true), done_(false),
      comp_(static_cast<size_t>(dim), 0) {
    if (dim < 1) throw ValidationError("multi-index stream: dimension must be >= 1");
    if (max_total < 0) throw ValidationError("multi-index stream: negative total cap");
}

bool next_composition(std::vector<int>& comp) {
    // Move one unit right of the rightmost positive entry before the last
    // slot, collecting everything past it; yields descending-first order.
    int dim = static_cast<int>(comp.size());
    int pivot = -1;
    for (int i = dim - 2; i >= 0; --i) {
        if (comp[static_cast<size_t>(i)] > 0) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0) return false;
    int tail = 0;
    for (int i = pivot + 1; i < dim; ++i) {
        tail += comp[static_cast<size_t>(i)];
        comp[static_cast<size_t>(i)] = 0;
    }
    comp[static_cast<size_t>(pivot)] -= 1;
    comp[static_cast<size_t>(pivot) + 1] = tail + 1;
    return true;
}

bool MultiIndexStream::advance_within_shell() {
    return next_composition(comp_);
}

bool MultiIndexStream::next(std::vector<int>& out) {
    if (done_) return false;
    if (shell_fresh_) {
        std::fill(comp_.begin(), comp_.end(), 0);
        comp_[0] = total_;
        shell_fresh_ = false;
    } else if (!advance_within_shell()) {
        ++total_;
        if (total_ > max_total_) {
            done_ = true;
            return false;
        }
        std::fill(comp_.begin(), comp_.end(), 0);
        comp_[0] = total_;
    }
    out = comp_;
    return true;
}

bool MultiIndexStream::next(MultiIndex& out) {
    return next(out.components);
}

std::vector<MultiIndex> iterate_multi_indices(int dim, int max_total) {
    std::vector<MultiIndex> all;
    MultiIndexStream stream(dim, max_total);
    MultiIndex idx;
    while (stream.next(idx)) all.push_back(idx);
    return all;
}

void HaParams::validate() const {
    if (b.size() != c.size())
        throw ValidationError("parameters: b and c must have equal length");
    if (b.empty())
        throw ValidationError("parameters: at least one variable required");
    for (double cl : c) {
        if (cl <= 0.0 && cl == std::floor(cl))
            throw PoleError("parameters: lower parameter is a nonpositive integer");
    }
}

void ErdelyiParams::validate() const {
    if (b.size() != c.size() + d.size())
        throw ValidationError("parameters: b must have length n + p");
    if (c.empty())
        throw ValidationError("parameters: at least one xi variable required");
    for (double cl : c) {
        if (cl <= 0.0 && cl == std::floor(cl))
            throw PoleError("parameters: lower parameter is a nonpositive integer");
    }
}

}  // namespace hyperfun
