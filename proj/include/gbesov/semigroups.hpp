#pragma once

#include <span>
#include <vector>

#include "gbesov/expansion.hpp"
#include "gbesov/hermite.hpp"
#include "gbesov/quadrature.hpp"

namespace gbesov {

/// Ornstein-Uhlenbeck semigroup on an expansion: T_t h_nu = e^{-t|nu|} h_nu.
HermiteExpansion ou_apply_spectral(const HermiteExpansion& f, double t);

/// T_t g(x) through the change-of-variable form
///   T_t g(x) = int g(sqrt(1-e^{-2t}) u + e^{-t} x) gamma_d(du).
double ou_apply_kernel(const RealFunction& g, double t, std::span<const double> x,
                       const QuadratureRule& rule);

/// Poisson-Hermite semigroup: P_t h_nu = e^{-t sqrt(|nu|)} h_nu.
HermiteExpansion poisson_apply_spectral(const HermiteExpansion& f, double t);

/// d^k/dt^k P_t f: multiplier (-sqrt(|nu|))^k e^{-t sqrt(|nu|)}.
HermiteExpansion poisson_derivative(const HermiteExpansion& f, double t, int k);

/// Quadrature for int_0^inf u^{-1/2} e^{-u} phi(u) du, the Bochner
/// subordination integral. Built by substituting u = v^2 (removing the
/// endpoint singularity) and applying a double-exponential half-line rule in
/// v; the weights absorb u^{-1/2} e^{-u}.
class SubordinationQuadrature {
public:
    /// step is the trapezoid step of the double-exponential variable; 0.03
    /// puts the mass identity defect near 1e-14.
    static SubordinationQuadrature build(double step = 0.03);

    std::size_t size() const { return u_.size(); }
    double node(std::size_t i) const { return u_[i]; }
    double weight(std::size_t i) const { return w_[i]; }

    /// sum_i w_i phi(u_i)
    double integrate(const std::function<double(double)>& phi) const;

    /// |sum_i w_i - sqrt(pi)|: the rule's defect on the mass identity.
    double mass_defect() const;

private:
    std::vector<double> u_, w_;
};

/// P_t f by the subordination integral applied coefficient-wise:
/// each coefficient is scaled by pi^{-1/2} int u^{-1/2} e^{-u} e^{-(t^2/4u)|nu|} du.
HermiteExpansion poisson_apply_subordination(const HermiteExpansion& f, double t,
                                             const SubordinationQuadrature& quad);

struct KernelValue {
    double value;
    double residual;  // quadrature error estimate
};

/// Poisson kernel p(t,x,y): the r-integral over (0,1), split at r = 1/e with
/// adaptive refinement on each piece. Throws NumericalError if the residual
/// estimate exceeds `tolerance`.
KernelValue poisson_kernel_eval(double t, std::span<const double> x, std::span<const double> y,
                                double tolerance = 1e-8);

/// Density of the one-sided stable measure of order 1/2:
/// (t / 2 sqrt(pi)) e^{-t^2/4s} s^{-3/2}.
double stable_measure_density(double t, double s);

/// k-th time derivative of the stable density, k <= 4 (closed forms).
double stable_density_time_derivative(double t, double s, int k);

/// int_0^inf |d^k/dt^k mu_t^{1/2}|(ds), evaluated in the self-similar
/// variable s = t^2 sigma over `segments` log-spaced panels.
double stable_derivative_mass(double t, int k, int segments = 160);

}  // namespace gbesov
