#include "gbesov/hermite.hpp"

#include <cmath>
#include <stdexcept>

#include "gbesov/kernels.hpp"

namespace gbesov {
namespace {

double hermite_axis(int n, double x) {
    if (n == 0) return 1.0;
    double h0 = 1.0;
    double h1 = std::sqrt(2.0) * x;
    for (int k = 1; k < n; ++k) {
        const double h2 = x * std::sqrt(2.0 / (k + 1)) * h1 - std::sqrt(k / (k + 1.0)) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

}  // namespace

double hermite_eval(const MultiIndex& nu, std::span<const double> x) {
    if (static_cast<std::size_t>(nu.dimension()) != x.size())
        throw std::invalid_argument("hermite_eval: index/point dimension mismatch");
    double v = 1.0;
    for (int a = 0; a < nu.dimension(); ++a) v *= hermite_axis(nu[a], x[a]);
    return v;
}

double fourier_coefficient(const RealFunction& g, const MultiIndex& nu, const QuadratureRule& rule) {
    if (nu.dimension() != rule.dimension())
        throw std::invalid_argument("fourier_coefficient: index/rule dimension mismatch");
    const std::size_t n = rule.size();
    std::vector<double> gv(n), hv(n);
    for (std::size_t i = 0; i < n; ++i) {
        gv[i] = g(rule.node(i));
        hv[i] = hermite_eval(nu, rule.node(i));
    }
    return kernels::ops().dot3(rule.weights().data(), gv.data(), hv.data(), n);
}

double expansion_eval(const HermiteExpansion& f, std::span<const double> x) {
    if (static_cast<std::size_t>(f.dimension()) != x.size())
        throw std::invalid_argument("expansion_eval: point dimension mismatch");
    double s = 0.0;
    for (const auto& [nu, c] : f.coefficients()) s += c * hermite_eval(nu, x);
    return s;
}

HermiteExpansion expand_function(const RealFunction& g, int max_order, const QuadratureRule& rule) {
    if (max_order < 0) throw std::invalid_argument("expand_function: max_order must be >= 0");
    HermiteExpansion f(rule.dimension());
    std::vector<int> idx(static_cast<std::size_t>(rule.dimension()), 0);
    // enumerate all nu with every entry <= max_order and |nu| <= max_order
    while (true) {
        int total = 0;
        for (int e : idx) total += e;
        if (total <= max_order) {
            MultiIndex nu(idx);
            f.set(nu, fourier_coefficient(g, nu, rule));
        }
        int a = rule.dimension() - 1;
        for (; a >= 0; --a) {
            if (++idx[static_cast<std::size_t>(a)] <= max_order) break;
            idx[static_cast<std::size_t>(a)] = 0;
        }
        if (a < 0) break;
    }
    return f;
}

ExpansionSampler::ExpansionSampler(const QuadratureRule& rule, const HermiteExpansion& f) {
    if (f.dimension() != rule.dimension())
        throw std::invalid_argument("ExpansionSampler: expansion/rule dimension mismatch");
    n_nodes_ = rule.size();
    support_.reserve(f.size());
    coeffs_.reserve(f.size());
    int max_axis_order = 0;
    for (const auto& [nu, c] : f.coefficients()) {
        support_.push_back(nu);
        coeffs_.push_back(c);
        for (int a = 0; a < nu.dimension(); ++a) max_axis_order = std::max(max_axis_order, nu[a]);
    }

    // per-axis Hermite table at the 1-D nodes, then tensor rows per nu
    const auto& axis = rule.axis_nodes();
    const std::size_t na = axis.size();
    std::vector<double> table(static_cast<std::size_t>(max_axis_order + 1) * na);
    kernels::ops().hermite_columns(table.data(), axis.data(), na, max_axis_order);

    basis_.assign(support_.size() * n_nodes_, 0.0);
    const int d = rule.dimension();
    std::vector<int> ai(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < n_nodes_; ++i) {
        rule.axis_indices(i, ai);
        for (std::size_t r = 0; r < support_.size(); ++r) {
            double v = 1.0;
            for (int a = 0; a < d; ++a)
                v *= table[static_cast<std::size_t>(support_[r][a]) * na + static_cast<std::size_t>(ai[static_cast<std::size_t>(a)])];
            basis_[r * n_nodes_ + i] = v;
        }
    }
}

void ExpansionSampler::sample(std::span<double> out,
                              const std::function<double(const MultiIndex&)>& multiplier) const {
    if (out.size() != n_nodes_) throw std::invalid_argument("ExpansionSampler::sample: bad buffer size");
    std::fill(out.begin(), out.end(), 0.0);
    const auto& k = kernels::ops();
    for (std::size_t r = 0; r < support_.size(); ++r) {
        const double c = multiplier ? multiplier(support_[r]) * coeffs_[r] : coeffs_[r];
        if (c != 0.0) k.axpy(out.data(), c, basis_.data() + r * n_nodes_, n_nodes_);
    }
}

std::vector<double> ExpansionSampler::sample(
    const std::function<double(const MultiIndex&)>& multiplier) const {
    std::vector<double> out(n_nodes_);
    sample(out, multiplier);
    return out;
}

}  // namespace gbesov
