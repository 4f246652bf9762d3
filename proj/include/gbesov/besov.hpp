#pragma once

#include <optional>
#include <vector>

#include "gbesov/exponents.hpp"
#include "gbesov/expansion.hpp"
#include "gbesov/hermite.hpp"
#include "gbesov/time_grid.hpp"

namespace gbesov {

/// Parameters of the variable Gaussian Besov-Lipschitz norm. k defaults to
/// the smallest integer greater than alpha; callers may pass a larger k (the
/// boundedness certificates need k > alpha + beta).
struct BesovParams {
    double alpha;
    int k;
    ExponentFunction p;  // gaussian domain, 1 < p_- <= p_+ < inf
    ExponentFunction q;  // halfline domain or the infinity symbol
    QuadratureRule space_rule;
    TimeGrid grid;

    BesovParams(double alpha_, ExponentFunction p_, ExponentFunction q_, QuadratureRule rule_,
                TimeGrid grid_, int k_override = 0);
};

/// Outcome of the mixed-norm computation, with the inner-norm trace
/// g(t) = || d^k/dt^k P_t f ||_{p(.),gamma} retained for diagnostics and CSV.
struct SeminormResult {
    double value = 0.0;
    std::vector<double> t;
    std::vector<double> g;            // inner norms
    double tail_residual = 0.0;       // estimate of the t -> 0 modular truncation
    bool boundary_attained = false;   // sup-type quantities peaking at a grid edge
    std::size_t argmax = 0;           // index maximizing t^{k-alpha} g(t)
};

/// Inner Luxemburg-norm sweep t -> || d^k/dt^k P_t f ||_{p(.),gamma_d} over
/// the grid; the basis matrix is built once, each t is a multiplier sweep.
std::vector<double> derivative_norm_sweep(const HermiteExpansion& f, int k,
                                          const ExponentFunction& p, const QuadratureRule& rule,
                                          const TimeGrid& grid);

/// || t^{k-alpha} g(t) ||_{q(.),dt/t} with g the inner Luxemburg-norm sweep.
SeminormResult besov_seminorm(const HermiteExpansion& f, const BesovParams& params);

struct InftyConstant {
    double value = 0.0;     // A_k(f)
    double t_at_max = 0.0;
    bool boundary_attained = false;
    bool envelope_ok = true;  // log-log slopes at the grid edges point inward
};

/// A_k(f) = sup_t t^{k-alpha} || d^k/dt^k P_t f ||_{p(.),gamma} as a grid
/// supremum; boundary attainment is flagged rather than silently accepted.
InftyConstant besov_infty_constant(const HermiteExpansion& f, const BesovParams& params);

/// || f ||_{p(.),gamma} + seminorm (or + A_k(f) on the q = infinity branch).
double besov_norm(const HermiteExpansion& f, const BesovParams& params);

}  // namespace gbesov
