#include "gbesov/operators.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace gbesov {
namespace {

// Trapezoid rule in tau = log t on [log eps, log T]. Spectrally accurate for
// integrands analytic in a strip and decaying at both ends, which all the
// Bessel-representation integrands are.
template <typename F>
double log_trapezoid(double eps, double upper, double points_per_unit, F&& integrand_times_t) {
    const double lo = std::log(eps), hi = std::log(upper);
    const int n = std::max(32, static_cast<int>(std::ceil(points_per_unit * (hi - lo)))) + 1;
    const double h = (hi - lo) / (n - 1);
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
        const double t = std::exp(lo + h * j);
        double contrib = integrand_times_t(t);
        if (j == 0 || j == n - 1) contrib *= 0.5;
        s += contrib;
    }
    return s * h;
}

double grid_density(const TimeGrid& grid) {
    const double span = std::log(grid.t_max() / grid.t_min());
    return std::max(12.0, grid.count() / span);
}

// Gamma(beta)^{-1} int_0^inf t^{beta-1} e^{-(1+a)t} dt = (1+a)^{-beta}
double potential_multiplier(double a, double beta, double ppu) {
    const double gamma_beta = std::tgamma(beta);
    const double target = 1e-13 * gamma_beta * std::pow(1.0 + a, -beta);
    // clamped: the t^{beta-1} envelope only bounds the integrand near 0
    const double eps = std::min(std::pow(beta * target, 1.0 / beta), 1e-2);
    double upper = 5.0 / (1.0 + a);
    while (std::pow(upper, beta - 1.0) * std::exp(-(1.0 + a) * upper) * 2.0 / (1.0 + a) > target)
        upper *= 1.5;
    const double integral = log_trapezoid(eps, upper, ppu, [&](double t) {
        return std::pow(t, beta) * std::exp(-(1.0 + a) * t);
    });
    return integral / gamma_beta;
}

// int_0^inf t^{-beta-1} (e^{-(1+a)t} - 1)^k dt, finite for 0 < beta < k.
double difference_integral(double a, double beta, int k, double ppu) {
    const double scale = std::max(1.0, std::pow(1.0 + a, beta));
    const double tol = 1e-14 * scale;
    // near 0 the integrand is ~ ((1+a)t)^k t^{-beta-1}; in the tail it is
    // ~ t^{-beta-1}. Both cutoff formulas are clamped to sane windows so
    // extreme beta cannot invert the integration range.
    const double eps = std::min(
        std::pow(tol * (k - beta) / std::pow(1.0 + a, k), 1.0 / (k - beta)), 1e-2);
    const double upper = std::max(std::pow(beta * tol, -1.0 / beta), 10.0 * k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    // evaluated in logs: t^{-beta-1} overflows while expm1(..)^k underflows
    // near the lower cutoff, but their product is t^{k-beta-1}-small
    return sign * log_trapezoid(eps, upper, ppu, [&](double t) {
        const double log_neg_diff = std::log(-std::expm1(-(1.0 + a) * t));
        return std::exp(-beta * std::log(t) + k * log_neg_diff);
    });
}

// Multipliers depend on nu only through |nu|; cache per order.
template <typename F>
HermiteExpansion apply_order_multiplier(const HermiteExpansion& f, F&& multiplier_of_order) {
    std::map<int, double> cache;
    return f.apply_multiplier([&](const MultiIndex& nu) {
        const int n = nu.order();
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, multiplier_of_order(n)).first;
        return it->second;
    });
}

}  // namespace

HermiteExpansion bessel_potential_spectral(const HermiteExpansion& f, double beta) {
    if (beta < 0.0) throw std::invalid_argument("bessel_potential_spectral: beta must be >= 0");
    return f.apply_multiplier([beta](const MultiIndex& nu) {
        return std::pow(1.0 + std::sqrt(nu.order()), -beta);
    });
}

HermiteExpansion bessel_potential_integral(const HermiteExpansion& f, double beta,
                                           const TimeGrid& grid) {
    if (!(beta > 0.0)) throw std::invalid_argument("bessel_potential_integral: beta must be > 0");
    const double ppu = grid_density(grid);
    return apply_order_multiplier(
        f, [&](int n) { return potential_multiplier(std::sqrt(n), beta, ppu); });
}

HermiteExpansion bessel_derivative_spectral(const HermiteExpansion& f, double beta) {
    if (beta < 0.0) throw std::invalid_argument("bessel_derivative_spectral: beta must be >= 0");
    return f.apply_multiplier([beta](const MultiIndex& nu) {
        return std::pow(1.0 + std::sqrt(nu.order()), beta);
    });
}

HermiteExpansion bessel_derivative_integral(const HermiteExpansion& f, double beta,
                                            const TimeGrid& grid) {
    const BesselOrder order(beta);
    const double ppu = grid_density(grid);
    const double norm = c_beta(order.k, beta);
    return apply_order_multiplier(f, [&](int n) {
        return difference_integral(std::sqrt(n), beta, order.k, ppu) / norm;
    });
}

double c_beta(int k, double beta) {
    if (k < 1) throw std::invalid_argument("c_beta: k must be >= 1");
    if (!(beta > 0.0) || beta >= k)
        throw std::invalid_argument("c_beta: need 0 < beta < k (divergent otherwise)");
    return difference_integral(0.0, beta, k, 16.0);
}

double binomial(int n, int j) {
    if (j < 0 || j > n) return 0.0;
    double c = 1.0;
    for (int m = 1; m <= j; ++m) c = c * (n - m + 1) / m;
    return c;
}

double forward_difference(const std::function<double(double)>& phi, int k, double s, double t) {
    if (k < 1) throw std::invalid_argument("forward_difference: k must be >= 1");
    if (!(s > 0.0)) throw std::invalid_argument("forward_difference: s must be > 0");
    double sum = 0.0;
    for (int j = 0; j <= k; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binomial(k, j) * phi(t + (k - j) * s);
    }
    return sum;
}

}  // namespace gbesov
