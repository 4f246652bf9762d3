#pragma once

#include <compare>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gbesov {

/// Multi-index nu = (nu_1,...,nu_d) of non-negative integers indexing the
/// Hermite basis. Total order |nu| and the factorial nu! are derived.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
        if (entries_.empty())
            throw std::invalid_argument("MultiIndex: dimension must be >= 1");
        for (int e : entries_)
            if (e < 0)
                throw std::invalid_argument("MultiIndex: entries must be non-negative");
    }
    MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

    static MultiIndex zeros(int dimension) {
        return MultiIndex(std::vector<int>(static_cast<std::size_t>(dimension), 0));
    }

    int dimension() const { return static_cast<int>(entries_.size()); }
    int operator[](int axis) const { return entries_[static_cast<std::size_t>(axis)]; }
    const std::vector<int>& entries() const { return entries_; }

    /// |nu| = sum of entries.
    int order() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

    /// nu! = product of entry factorials, as a double (exceeds 2^53 for large orders).
    double factorial() const {
        double f = 1.0;
        for (int e : entries_)
            for (int m = 2; m <= e; ++m) f *= m;
        return f;
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
};

}  // namespace gbesov
