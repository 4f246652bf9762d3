#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gbesov/expansion.hpp"
#include "gbesov/multi_index.hpp"
#include "gbesov/quadrature.hpp"

namespace gbesov {

/// Normalized Hermite polynomial h_nu(x), orthonormal in L^2(gamma_d).
/// Evaluated through the per-coordinate three-term recurrence
///   h_{k+1}(x) = x sqrt(2/(k+1)) h_k(x) - sqrt(k/(k+1)) h_{k-1}(x),
/// stable to orders well past 100, then the tensor product over coordinates.
double hermite_eval(const MultiIndex& nu, std::span<const double> x);

/// Tensor-product Gauss rule against gamma_d; see QuadratureRule::gauss.
inline QuadratureRule gauss_rule(int dimension, int points_per_axis) {
    return QuadratureRule::gauss(dimension, points_per_axis);
}

using RealFunction = std::function<double(std::span<const double>)>;

/// nu-th Fourier-Hermite coefficient <g, h_nu> by quadrature.
double fourier_coefficient(const RealFunction& g, const MultiIndex& nu, const QuadratureRule& rule);

/// Pointwise evaluation of a finite expansion.
double expansion_eval(const HermiteExpansion& f, std::span<const double> x);

/// Projects an evaluable function onto span{h_nu : |nu| <= max_order}.
HermiteExpansion expand_function(const RealFunction& g, int max_order, const QuadratureRule& rule);

/// Samples expansions at every node of a rule. The Hermite basis matrix for
/// the expansion's support is built once (kernel recurrence sweep per axis);
/// repeated sampling with different coefficient multipliers -- the
/// semigroup/Besov sweeps -- is then a dense accumulate.
class ExpansionSampler {
public:
    ExpansionSampler(const QuadratureRule& rule, const HermiteExpansion& f);

    std::size_t node_count() const { return n_nodes_; }

    /// out[i] = sum_nu multiplier(nu) * c_nu * h_nu(x_i); identity multiplier
    /// when the functional is empty.
    void sample(std::span<double> out,
                const std::function<double(const MultiIndex&)>& multiplier = {}) const;

    std::vector<double> sample(const std::function<double(const MultiIndex&)>& multiplier = {}) const;

private:
    std::size_t n_nodes_ = 0;
    std::vector<MultiIndex> support_;
    std::vector<double> coeffs_;
    std::vector<double> basis_;  // support_.size() x n_nodes_, row-major
};

}  // namespace gbesov
