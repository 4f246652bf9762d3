#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "gbesov/multi_index.hpp"

namespace gbesov {

/// Finite Hermite series: dimension d plus a sparse map nu -> coefficient.
/// The map is ordered so that iteration (and hence every reduction built on
/// it) is deterministic.
class HermiteExpansion {
public:
    using CoefficientMap = std::map<MultiIndex, double>;

    explicit HermiteExpansion(int dimension) : dim_(dimension) {
        if (dimension < 1) throw std::invalid_argument("HermiteExpansion: dimension must be >= 1");
    }

    static HermiteExpansion basis(const MultiIndex& nu, double coefficient = 1.0) {
        HermiteExpansion f(nu.dimension());
        f.set(nu, coefficient);
        return f;
    }

    int dimension() const { return dim_; }
    const CoefficientMap& coefficients() const { return coef_; }
    bool empty() const { return coef_.empty(); }
    std::size_t size() const { return coef_.size(); }

    double coefficient(const MultiIndex& nu) const {
        auto it = coef_.find(nu);
        return it == coef_.end() ? 0.0 : it->second;
    }

    void set(const MultiIndex& nu, double value) {
        if (nu.dimension() != dim_)
            throw std::invalid_argument("HermiteExpansion::set: index dimension mismatch");
        if (value == 0.0)
            coef_.erase(nu);
        else
            coef_[nu] = value;
    }

    void add(const MultiIndex& nu, double value) { set(nu, coefficient(nu) + value); }

    int max_order() const {
        int m = 0;
        for (const auto& [nu, c] : coef_) m = std::max(m, nu.order());
        return m;
    }

    /// L2(gamma_d) norm; equals the Euclidean norm of the coefficient vector
    /// by orthonormality of the basis.
    double l2_norm() const {
        double s = 0.0;
        for (const auto& [nu, c] : coef_) s += c * c;
        return std::sqrt(s);
    }

    HermiteExpansion& operator+=(const HermiteExpansion& other) {
        if (other.dim_ != dim_) throw std::invalid_argument("HermiteExpansion: dimension mismatch");
        for (const auto& [nu, c] : other.coef_) add(nu, c);
        return *this;
    }

    HermiteExpansion& operator*=(double scale) {
        if (scale == 0.0) {
            coef_.clear();
        } else {
            for (auto& [nu, c] : coef_) c *= scale;
        }
        return *this;
    }

    friend HermiteExpansion operator+(HermiteExpansion a, const HermiteExpansion& b) {
        a += b;
        return a;
    }
    friend HermiteExpansion operator*(double scale, HermiteExpansion f) {
        f *= scale;
        return f;
    }

    /// Coefficient-wise map c_nu -> multiplier(nu) * c_nu; the workhorse of
    /// every spectral operator.
    HermiteExpansion apply_multiplier(const std::function<double(const MultiIndex&)>& multiplier) const {
        HermiteExpansion out(dim_);
        for (const auto& [nu, c] : coef_) out.set(nu, multiplier(nu) * c);
        return out;
    }

private:
    int dim_;
    CoefficientMap coef_;
};

/// Wiener-chaos projection J_n f = sum over |nu| = n of f^(nu) h_nu.
inline HermiteExpansion chaos_projection(const HermiteExpansion& f, int n) {
    if (n < 0) throw std::invalid_argument("chaos_projection: n must be >= 0");
    HermiteExpansion out(f.dimension());
    for (const auto& [nu, c] : f.coefficients())
        if (nu.order() == n) out.set(nu, c);
    return out;
}

}  // namespace gbesov
