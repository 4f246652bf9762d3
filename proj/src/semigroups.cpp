#include "gbesov/semigroups.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gbesov/exponents.hpp"

namespace gbesov {

namespace {
constexpr double kPi = std::numbers::pi;
}

HermiteExpansion ou_apply_spectral(const HermiteExpansion& f, double t) {
    if (t < 0.0) throw std::invalid_argument("ou_apply_spectral: t must be >= 0");
    return f.apply_multiplier([t](const MultiIndex& nu) { return std::exp(-t * nu.order()); });
}

double ou_apply_kernel(const RealFunction& g, double t, std::span<const double> x,
                       const QuadratureRule& rule) {
    if (!(t > 0.0)) throw std::invalid_argument("ou_apply_kernel: t must be > 0");
    if (x.size() != static_cast<std::size_t>(rule.dimension()))
        throw std::invalid_argument("ou_apply_kernel: point/rule dimension mismatch");
    const double decay = std::exp(-t);
    const double spread = std::sqrt(-std::expm1(-2.0 * t));
    std::vector<double> y(x.size());
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const auto u = rule.node(i);
        for (std::size_t a = 0; a < y.size(); ++a) y[a] = spread * u[a] + decay * x[a];
        s += rule.weight(i) * g(y);
    }
    return s;
}

HermiteExpansion poisson_apply_spectral(const HermiteExpansion& f, double t) {
    if (t < 0.0) throw std::invalid_argument("poisson_apply_spectral: t must be >= 0");
    return f.apply_multiplier(
        [t](const MultiIndex& nu) { return std::exp(-t * std::sqrt(nu.order())); });
}

HermiteExpansion poisson_derivative(const HermiteExpansion& f, double t, int k) {
    if (k < 0) throw std::invalid_argument("poisson_derivative: k must be >= 0");
    if (t < 0.0 || (t == 0.0 && k > 0))
        throw std::invalid_argument("poisson_derivative: t must be > 0 (k = 0 allowed at t = 0)");
    return f.apply_multiplier([t, k](const MultiIndex& nu) {
        const double a = std::sqrt(nu.order());
        double m = std::exp(-t * a);
        for (int j = 0; j < k; ++j) m *= -a;
        return m;
    });
}

SubordinationQuadrature SubordinationQuadrature::build(double step) {
    if (!(step > 0.0) || step > 0.2)
        throw std::invalid_argument("SubordinationQuadrature: step must be in (0, 0.2]");
    SubordinationQuadrature q;
    const double w_lo = -3.7, w_hi = 1.15;
    const int n = static_cast<int>(std::ceil((w_hi - w_lo) / step));
    q.u_.reserve(static_cast<std::size_t>(n) + 1);
    q.w_.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const double w = w_lo + (w_hi - w_lo) * j / n;
        const double v = std::exp(0.5 * kPi * std::sinh(w));
        const double jac = 0.5 * kPi * std::cosh(w) * v;
        q.u_.push_back(v * v);
        q.w_.push_back(2.0 * std::exp(-v * v) * jac * ((w_hi - w_lo) / n));
    }
    return q;
}

double SubordinationQuadrature::integrate(const std::function<double(double)>& phi) const {
    double s = 0.0;
    for (std::size_t i = 0; i < u_.size(); ++i) s += w_[i] * phi(u_[i]);
    return s;
}

double SubordinationQuadrature::mass_defect() const {
    double s = 0.0;
    for (double w : w_) s += w;
    return std::fabs(s - std::sqrt(kPi));
}

HermiteExpansion poisson_apply_subordination(const HermiteExpansion& f, double t,
                                             const SubordinationQuadrature& quad) {
    if (!(t > 0.0)) throw std::invalid_argument("poisson_apply_subordination: t must be > 0");
    const double defect = quad.mass_defect();
    if (defect > 1e-10)
        throw NumericalError("poisson_apply_subordination: quadrature mass identity not met", defect);
    const double tt4 = 0.25 * t * t;
    return f.apply_multiplier([&](const MultiIndex& nu) {
        const int order = nu.order();
        if (order == 0) return 1.0;  // P_t 1 = 1 exactly
        const double c = tt4 * order;
        return quad.integrate([c](double u) { return std::exp(-c / u); }) / std::sqrt(kPi);
    });
}

KernelValue poisson_kernel_eval(double t, std::span<const double> x, std::span<const double> y,
                                double tolerance) {
    if (!(t > 0.0)) throw std::invalid_argument("poisson_kernel_eval: t must be > 0");
    if (x.size() != y.size()) throw std::invalid_argument("poisson_kernel_eval: dimension mismatch");
    const int d = static_cast<int>(x.size());

    // The (0,1) integral against dr/r, taken in s = -log r so that both
    // pieces are bounded: the split at r = 1/e becomes s = 1, the piece near
    // r = 1 (where (1-r^2)^{-d/2} grows) is s in (0,1) where e^{-t^2/4s}
    // vanishes to all orders, and the piece near r = 0 is the algebraic
    // s^{-3/2} tail.
    const auto integrand = [&](double s) {
        const double r = std::exp(-s);
        const double om = -std::expm1(-2.0 * s);  // 1 - r^2
        double dist2 = 0.0;
        for (int a = 0; a < d; ++a) {
            const double diff = y[static_cast<std::size_t>(a)] - r * x[static_cast<std::size_t>(a)];
            dist2 += diff * diff;
        }
        const double arg = -0.25 * t * t / s - dist2 / om;
        if (arg < -745.0) return 0.0;
        return t * std::exp(arg) * std::pow(s, -1.5) * std::pow(om, -0.5 * d);
    };

    // tail s in (1, inf) as int_0^1 w^{-1/2} ... dw, w = 1/s, written directly
    // in w so nothing under/overflows at the tanh_sinh abscissas near 0
    const auto tail = [&](double w) {
        const double r = std::exp(-1.0 / w);
        const double om = -std::expm1(-2.0 / w);
        double dist2 = 0.0;
        for (int a = 0; a < d; ++a) {
            const double diff = y[static_cast<std::size_t>(a)] - r * x[static_cast<std::size_t>(a)];
            dist2 += diff * diff;
        }
        const double arg = -0.25 * t * t * w - dist2 / om;
        if (arg < -745.0) return 0.0;
        return t * std::exp(arg) / std::sqrt(w) * std::pow(om, -0.5 * d);
    };

    using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
    double err1 = 0.0, err2 = 0.0;
    const double part1 = gk::integrate(integrand, 0.0, 1.0, 15, 1e-12, &err1);
    static thread_local boost::math::quadrature::tanh_sinh<double> ts;
    const double part2 = ts.integrate(tail, 0.0, 1.0, 1e-12, &err2);
    err2 *= std::fabs(part2);  // tanh_sinh reports relative error
    const double norm = 2.0 * std::pow(kPi, 0.5 * (d + 1));
    KernelValue out{(part1 + part2) / norm, (err1 + err2) / norm};
    if (!(out.residual < tolerance))
        throw NumericalError("poisson_kernel_eval: endpoint-singularity tolerance not met",
                             out.residual);
    return out;
}

double stable_measure_density(double t, double s) {
    if (!(t > 0.0) || !(s > 0.0))
        throw std::invalid_argument("stable_measure_density: t, s must be > 0");
    return 0.5 * t / std::sqrt(kPi) * std::exp(-0.25 * t * t / s) * std::pow(s, -1.5);
}

double stable_density_time_derivative(double t, double s, int k) {
    if (!(t > 0.0) || !(s > 0.0))
        throw std::invalid_argument("stable_density_time_derivative: t, s must be > 0");
    const double pref = 0.5 / std::sqrt(kPi) * std::exp(-0.25 * t * t / s) * std::pow(s, -1.5);
    const double t2 = t * t;
    switch (k) {
        case 0: return pref * t;
        case 1: return pref * (1.0 - t2 / (2.0 * s));
        case 2: return pref * (-1.5 * t / s + t * t2 / (4.0 * s * s));
        case 3: return pref * (-1.5 / s + 1.5 * t2 / (s * s) - t2 * t2 / (8.0 * s * s * s));
        case 4:
            return pref * (3.75 * t / (s * s) - 1.25 * t * t2 / (s * s * s) +
                           t * t2 * t2 / (16.0 * s * s * s * s));
        default:
            throw std::invalid_argument("stable_density_time_derivative: k must be in [0, 4]");
    }
}

double stable_derivative_mass(double t, int k, int segments) {
    if (!(t > 0.0)) throw std::invalid_argument("stable_derivative_mass: t must be > 0");
    if (k < 0 || k > 4) throw std::invalid_argument("stable_derivative_mass: k must be in [0, 4]");
    if (segments < 8) throw std::invalid_argument("stable_derivative_mass: need >= 8 segments");

    // s = t^2 sigma; the closed-form derivative is still evaluated at the
    // physical (t, s), so the exact t^{-k} self-similarity is a property of
    // the formulas, not an analytic shortcut baked in here.
    using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
    const double lo = std::log(1e-6), hi = std::log(1e26);
    const double t2 = t * t;
    double total = 0.0;
    for (int j = 0; j < segments; ++j) {
        const double a = std::exp(lo + (hi - lo) * j / segments);
        const double b = std::exp(lo + (hi - lo) * (j + 1) / segments);
        total += gk::integrate(
            [&](double sigma) {
                return std::fabs(stable_density_time_derivative(t, t2 * sigma, k)) * t2;
            },
            a, b, 10, 1e-12);
    }
    return total;
}

}  // namespace gbesov
