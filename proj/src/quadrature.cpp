#include "gbesov/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gbesov {
namespace {

constexpr int kMaxAxisPoints = 200;
constexpr std::size_t kMaxTotalPoints = 4u << 20;

// Sturm count for the Jacobi matrix of the gamma_1-orthonormal Hermite
// recurrence: zero diagonal, off-diagonals b_k = sqrt(k/2). Returns the
// number of eigenvalues strictly below lambda.
int sturm_count(int n, double lambda) {
    int count = 0;
    double d = -lambda;
    if (d < 0.0) ++count;
    for (int k = 1; k < n; ++k) {
        const double b2 = 0.5 * k;
        double denom = d;
        if (denom == 0.0) denom = 1e-300;
        d = -lambda - b2 / denom;
        if (d < 0.0) ++count;
    }
    return count;
}

// Eigenvalues of the Jacobi matrix = Gauss nodes for gamma_1.
std::vector<double> gauss_nodes(int n) {
    const double radius = 2.0 * std::sqrt(0.5 * n) + 2.0;
    std::vector<double> nodes(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double lo = -radius, hi = radius;
        // bisect on the Sturm count until the i-th eigenvalue is pinned
        for (int iter = 0; iter < 120 && hi - lo > 1e-16 * radius; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (sturm_count(n, mid) <= i)
                lo = mid;
            else
                hi = mid;
        }
        nodes[static_cast<std::size_t>(i)] = 0.5 * (lo + hi);
    }
    // enforce exact symmetry of the node set
    for (int i = 0; i < n / 2; ++i) {
        const double v = 0.5 * (nodes[static_cast<std::size_t>(n - 1 - i)] - nodes[static_cast<std::size_t>(i)]);
        nodes[static_cast<std::size_t>(i)] = -v;
        nodes[static_cast<std::size_t>(n - 1 - i)] = v;
    }
    if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return nodes;
}

// w_i = 1 / sum_{k<n} h_k(x_i)^2 with the orthonormal recurrence; valid since
// gamma_1 has unit mass.
std::vector<double> gauss_weights(const std::vector<double>& nodes) {
    const int n = static_cast<int>(nodes.size());
    std::vector<double> w(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double x = nodes[i];
        double h0 = 1.0, h1 = std::sqrt(2.0) * x;
        double s = h0 * h0;
        if (n > 1) s += h1 * h1;
        for (int k = 1; k < n - 1; ++k) {
            const double h2 = x * std::sqrt(2.0 / (k + 1)) * h1 - std::sqrt(k / (k + 1.0)) * h0;
            h0 = h1;
            h1 = h2;
            s += h2 * h2;
        }
        w[i] = 1.0 / s;
    }
    return w;
}

}  // namespace

QuadratureRule::QuadratureRule(int dim, std::vector<double> axis_nodes,
                               std::vector<double> axis_weights)
    : dim_(dim), axis_nodes_(std::move(axis_nodes)), axis_weights_(std::move(axis_weights)) {
    per_axis_ = static_cast<int>(axis_nodes_.size());
    std::size_t total = 1;
    for (int a = 0; a < dim_; ++a) {
        total *= axis_nodes_.size();
        if (total > kMaxTotalPoints)
            throw std::invalid_argument("QuadratureRule: tensor rule too large");
    }
    points_.resize(total * static_cast<std::size_t>(dim_));
    weights_.resize(total);
    std::vector<int> idx(static_cast<std::size_t>(dim_), 0);
    for (std::size_t i = 0; i < total; ++i) {
        double w = 1.0;
        for (int a = 0; a < dim_; ++a) {
            const auto j = static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]);
            points_[i * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(a)] = axis_nodes_[j];
            w *= axis_weights_[j];
        }
        weights_[i] = w;
        for (int a = dim_ - 1; a >= 0; --a) {
            if (++idx[static_cast<std::size_t>(a)] < per_axis_) break;
            idx[static_cast<std::size_t>(a)] = 0;
        }
    }
}

QuadratureRule QuadratureRule::gauss(int dimension, int points_per_axis) {
    if (dimension < 1) throw std::invalid_argument("QuadratureRule::gauss: dimension must be >= 1");
    if (points_per_axis < 1 || points_per_axis > kMaxAxisPoints)
        throw std::invalid_argument("QuadratureRule::gauss: points per axis must be in [1, 200]");
    auto nodes = gauss_nodes(points_per_axis);
    auto weights = gauss_weights(nodes);
    return QuadratureRule(dimension, std::move(nodes), std::move(weights));
}

QuadratureRule QuadratureRule::uniform(int dimension, double half_width, int points_per_axis) {
    if (dimension < 1) throw std::invalid_argument("QuadratureRule::uniform: dimension must be >= 1");
    if (points_per_axis < 3) throw std::invalid_argument("QuadratureRule::uniform: need >= 3 points");
    if (!(half_width > 0.0)) throw std::invalid_argument("QuadratureRule::uniform: half_width must be > 0");
    const std::size_t n = static_cast<std::size_t>(points_per_axis);
    const double h = 2.0 * half_width / (points_per_axis - 1);
    std::vector<double> nodes(n), weights(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = -half_width + h * static_cast<double>(j);
        nodes[j] = x;
        double w = h * std::exp(-x * x) / std::sqrt(std::numbers::pi);
        if (j == 0 || j + 1 == n) w *= 0.5;
        weights[j] = w;
    }
    return QuadratureRule(dimension, std::move(nodes), std::move(weights));
}

double QuadratureRule::log_flat_weight(std::size_t i) const {
    double norm2 = 0.0;
    const auto x = node(i);
    for (double c : x) norm2 += c * c;
    return std::log(weights_[i]) + norm2 + 0.5 * dim_ * std::log(std::numbers::pi);
}

void QuadratureRule::axis_indices(std::size_t i, std::span<int> out) const {
    for (int a = dim_ - 1; a >= 0; --a) {
        out[static_cast<std::size_t>(a)] = static_cast<int>(i % static_cast<std::size_t>(per_axis_));
        i /= static_cast<std::size_t>(per_axis_);
    }
}

double QuadratureRule::integrate(const std::function<double(std::span<const double>)>& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i) s += weights_[i] * f(node(i));
    return s;
}

}  // namespace gbesov
