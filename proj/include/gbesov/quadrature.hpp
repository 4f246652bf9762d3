#pragma once

#include <functional>
#include <span>
#include <vector>

namespace gbesov {

/// Nodes and positive weights integrating against the Gaussian probability
/// measure gamma_d(dx) = e^{-|x|^2} pi^{-d/2} dx. Tensor product of a 1-D
/// base rule; nodes are materialized row-major (node i occupies
/// points()[i*d .. i*d+d-1]).
class QuadratureRule {
public:
    /// Gauss rule with n points per axis, exact on per-axis degree <= 2n-1.
    /// n is capped at 200 per axis (node solve stays well-conditioned there).
    static QuadratureRule gauss(int dimension, int points_per_axis);

    /// Trapezoid rule on [-half_width, half_width]^d with the Gaussian weight
    /// folded into the weights. Converges spectrally for smooth integrands and
    /// is insensitive to |x|-type kinks, unlike the Gauss rule.
    static QuadratureRule uniform(int dimension, double half_width, int points_per_axis);

    int dimension() const { return dim_; }
    int points_per_axis() const { return per_axis_; }
    std::size_t size() const { return weights_.size(); }

    std::span<const double> node(std::size_t i) const {
        return {points_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
    }
    double weight(std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<double>& points() const { return points_; }

    /// ln(w_i) + |x_i|^2 + (d/2) ln(pi): weight logarithms for pairing against
    /// plain Lebesgue measure, e.g. integrating kernels in y. Kept in logs
    /// because e^{|x|^2} overflows at the extreme Gauss nodes.
    double log_flat_weight(std::size_t i) const;

    const std::vector<double>& axis_nodes() const { return axis_nodes_; }
    const std::vector<double>& axis_weights() const { return axis_weights_; }

    /// Decompose flat node index into per-axis indices.
    void axis_indices(std::size_t i, std::span<int> out) const;

    double integrate(const std::function<double(std::span<const double>)>& f) const;

private:
    QuadratureRule(int dim, std::vector<double> axis_nodes, std::vector<double> axis_weights);

    int dim_ = 1;
    int per_axis_ = 1;
    std::vector<double> axis_nodes_, axis_weights_;
    std::vector<double> points_, weights_;
};

}  // namespace gbesov
