#pragma once

#include <functional>

#include "gbesov/expansion.hpp"
#include "gbesov/time_grid.hpp"

namespace gbesov {

/// Fractional order beta > 0 together with k, the smallest integer greater
/// than beta (k - 1 <= beta < k).
struct BesselOrder {
    double beta;
    int k;
    explicit BesselOrder(double beta_) : beta(beta_), k(static_cast<int>(std::floor(beta_)) + 1) {
        if (!(beta_ > 0.0)) throw std::invalid_argument("BesselOrder: beta must be > 0");
    }
};

/// Bessel potential J_beta: multiplier (1 + sqrt(|nu|))^{-beta}. beta = 0 is
/// accepted as the identity.
HermiteExpansion bessel_potential_spectral(const HermiteExpansion& f, double beta);

/// J_beta through the representation Gamma(beta)^{-1} int t^beta e^{-t} P_t f dt/t,
/// applied coefficient-wise by quadrature. The grid supplies the log-density
/// of integration points; the integration cutoffs are computed from analytic
/// envelope bounds (< 1e-13 relative), not taken from the grid range.
HermiteExpansion bessel_potential_integral(const HermiteExpansion& f, double beta,
                                           const TimeGrid& grid);

/// Bessel fractional derivative D^beta: multiplier (1 + sqrt(|nu|))^beta.
HermiteExpansion bessel_derivative_spectral(const HermiteExpansion& f, double beta);

/// D^beta through the forward-difference representation
///   c_beta^{k,-1} int t^{-beta-1} (e^{-t} P_t - I)^k f dt,  k = floor(beta)+1.
HermiteExpansion bessel_derivative_integral(const HermiteExpansion& f, double beta,
                                            const TimeGrid& grid);

/// c^k_beta = int_0^inf u^{-beta-1} (e^{-u} - 1)^k du, finite for 0 < beta < k;
/// sign is (-1)^k. beta >= k is rejected (divergent).
double c_beta(int k, double beta);

/// k-th forward difference sum_{j=0}^{k} C(k,j) (-1)^j phi(t + (k-j) s).
double forward_difference(const std::function<double(double)>& phi, int k, double s, double t);

/// Binomial coefficient as a double.
double binomial(int n, int j);

}  // namespace gbesov
