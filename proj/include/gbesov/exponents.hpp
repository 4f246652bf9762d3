#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gbesov/quadrature.hpp"
#include "gbesov/time_grid.hpp"

namespace gbesov {

/// Numerical failure with a quantified residual (quadrature not converged,
/// Luxemburg bracket blow-up, ...). Distinct from std::invalid_argument,
/// which flags contract violations.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Exponent function p(.) on R^d against gamma_d, or q(.) on R+ against dt/t.
/// All supported families are radial: the evaluator sees ||x|| (or t). The
/// declarative kinds (constant / rational decay / table) are what the CLI
/// config can spell; `derived` covers internally constructed exponents such
/// as conjugates.
class ExponentFunction {
public:
    enum class Domain { gaussian, halfline };

    static ExponentFunction constant(Domain d, double value);
    /// limit + amplitude / (offset + r)^power; the model decay family.
    static ExponentFunction rational_decay(Domain d, double limit, double amplitude,
                                           double offset, double power);
    /// Piecewise-linear interpolation in r, clamped at the ends.
    static ExponentFunction table(Domain d, std::vector<double> radii, std::vector<double> values);
    /// The symbol infinity for the outer Besov exponent.
    static ExponentFunction infinity();
    static ExponentFunction derived(Domain d, std::function<double(double)> radial,
                                    double p_minus, double p_plus, double limit);

    Domain domain() const { return domain_; }
    bool is_infinity() const { return infinite_; }

    /// Evaluate at radius / time coordinate.
    double at(double r) const;
    /// Evaluate at a point of R^d (uses the Euclidean norm).
    double operator()(std::span<const double> x) const;

    double p_minus() const { return p_minus_; }
    double p_plus() const { return p_plus_; }
    /// p_infinity (gaussian) or q(infinity) (halfline).
    double limit_value() const { return limit_; }
    /// q(0) for halfline exponents.
    double value_at_zero() const { return at(0.0); }

    /// Conjugate exponent p'(x) = p(x)/(p(x)-1); requires p_minus > 1.
    ExponentFunction conjugate() const;

    std::vector<double> sample(const QuadratureRule& rule) const;
    std::vector<double> sample(const TimeGrid& grid) const;

private:
    ExponentFunction() = default;

    Domain domain_ = Domain::gaussian;
    bool infinite_ = false;
    std::function<double(double)> radial_;
    double p_minus_ = 1.0, p_plus_ = 1.0, limit_ = 1.0;
};

/// Sampled function paired with the weights of the underlying measure; the
/// carrier for every norm computation.
struct DiscretizedFunction {
    int dimension = 1;
    std::vector<double> points;   // node coordinates, row-major (times for halfline)
    std::vector<double> values;   // f(x_i), signed
    std::vector<double> weights;  // measure weights

    static DiscretizedFunction from_rule(const QuadratureRule& rule,
                                         const std::function<double(std::span<const double>)>& f);
    static DiscretizedFunction on_time_grid(const TimeGrid& grid,
                                            const std::function<double(double)>& f);
    std::span<const double> point(std::size_t i) const {
        return {points.data() + i * static_cast<std::size_t>(dimension),
                static_cast<std::size_t>(dimension)};
    }
};

/// Modular rho_{p(.)}(f) = sum_i w_i |f(x_i)|^{p(x_i)}.
double modular(const DiscretizedFunction& f, const ExponentFunction& p);

/// Luxemburg norm inf{lambda > 0 : rho(f/lambda) <= 1} by bracket doubling
/// plus bisection in log(lambda), relative tolerance 1e-12. Returns 0 for the
/// zero function; throws NumericalError if the bracket escapes 2^64.
double luxemburg_norm(const DiscretizedFunction& f, const ExponentFunction& p);

/// Low-level form over pre-sampled exponent values.
double luxemburg_norm(std::span<const double> values, std::span<const double> weights,
                      std::span<const double> p_samples);

/// Luxemburg norm of g against dt/t on a TimeGrid; the q = infinity branch
/// returns the grid supremum of |g|.
double haar_norm(const DiscretizedFunction& g, const ExponentFunction& q);

struct LogHolderEstimate {
    double c_local;     // sup |p(x)-p(y)| log(e + 1/|x-y|)
    double c_infinity;  // sup |p(x)-p_inf| log(e + |x - x0|), x0 = 0
};

/// Grid certificate for Definition-style log-Holder membership: finite,
/// refinement-stable constants certify membership on the grid (never a proof).
LogHolderEstimate check_log_holder(const ExponentFunction& p, std::span<const double> radii);

/// sup |p(x) - p_inf| * ||x||^2 over the grid: the P^inf_{gamma_d} constant.
double pgamma_constant(const ExponentFunction& p, std::span<const double> radii);

struct HalflineClassEstimate {
    double a_zero;  // sup_{0<t<=1/2} |q(t)-q(0)| ln(1/t)
    double a_inf;   // sup_{t>2}      |q(t)-q(inf)| ln(t)
};

/// Certificate for the P_{0,inf} conditions ii_0 and ii_inf.
HalflineClassEstimate p0inf_constants(const ExponentFunction& q, std::span<const double> times);

}  // namespace gbesov
