#include "gbesov/besov.hpp"

#include <cmath>
#include <stdexcept>

namespace gbesov {
namespace {

int default_k(double alpha) { return static_cast<int>(std::floor(alpha)) + 1; }

}  // namespace

std::vector<double> derivative_norm_sweep(const HermiteExpansion& f, int k,
                                          const ExponentFunction& p, const QuadratureRule& rule,
                                          const TimeGrid& grid) {
    const ExpansionSampler sampler(rule, f);
    const auto p_samples = p.sample(rule);
    std::vector<double> g(static_cast<std::size_t>(grid.count()));
    std::vector<double> values(sampler.node_count());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double t = grid.point(j);
        sampler.sample(values, [t, k](const MultiIndex& nu) {
            const double a = std::sqrt(nu.order());
            double m = std::exp(-t * a);
            for (int i = 0; i < k; ++i) m *= -a;
            return m;
        });
        g[j] = luxemburg_norm(values, rule.weights(), p_samples);
    }
    return g;
}

BesovParams::BesovParams(double alpha_, ExponentFunction p_, ExponentFunction q_,
                         QuadratureRule rule_, TimeGrid grid_, int k_override)
    : alpha(alpha_),
      k(k_override > 0 ? k_override : default_k(alpha_)),
      p(std::move(p_)),
      q(std::move(q_)),
      space_rule(std::move(rule_)),
      grid(std::move(grid_)) {
    if (alpha < 0.0) throw std::invalid_argument("BesovParams: alpha must be >= 0");
    if (!(k > alpha)) throw std::invalid_argument("BesovParams: k must exceed alpha");
    if (p.is_infinity() || !(p.p_minus() > 1.0) || !std::isfinite(p.p_plus()))
        throw std::invalid_argument("BesovParams: p must satisfy 1 < p_- <= p_+ < inf");
    if (!q.is_infinity() && q.domain() != ExponentFunction::Domain::halfline)
        throw std::invalid_argument("BesovParams: q must live on the half-line (or be infinity)");
}

SeminormResult besov_seminorm(const HermiteExpansion& f, const BesovParams& params) {
    SeminormResult out;
    out.t = params.grid.points();
    out.g = derivative_norm_sweep(f, params.k, params.p, params.space_rule, params.grid);

    const double m = params.k - params.alpha;
    std::vector<double> outer(out.g.size());
    double best = -1.0;
    for (std::size_t j = 0; j < outer.size(); ++j) {
        outer[j] = std::pow(out.t[j], m) * out.g[j];
        if (outer[j] > best) {
            best = outer[j];
            out.argmax = j;
        }
    }
    out.boundary_attained = best > 0.0 && (out.argmax == 0 || out.argmax + 1 == outer.size());

    if (params.q.is_infinity()) {
        out.value = best;
        return out;
    }

    DiscretizedFunction G;
    G.dimension = 1;
    G.points = out.t;
    G.values = std::move(outer);
    G.weights = params.grid.haar_weights();
    out.value = haar_norm(G, params.q);

    // t -> 0 truncation of the outer modular: below t_min the integrand is
    // essentially (t^{k-alpha} g(0+) / lambda)^{q(0)} dt/t
    if (out.value > 0.0) {
        const double q0 = params.q.value_at_zero();
        const double ratio = out.g.front() / out.value;
        out.tail_residual = std::pow(params.grid.t_min(), m * q0) * std::pow(ratio, q0) / (m * q0);
    }
    return out;
}

InftyConstant besov_infty_constant(const HermiteExpansion& f, const BesovParams& params) {
    const auto g = derivative_norm_sweep(f, params.k, params.p, params.space_rule, params.grid);
    const double m = params.k - params.alpha;
    InftyConstant out;
    std::size_t arg = 0;
    std::vector<double> outer(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        outer[j] = std::pow(params.grid.point(j), m) * g[j];
        if (outer[j] > out.value) {
            out.value = outer[j];
            arg = j;
        }
    }
    out.t_at_max = params.grid.point(arg);
    if (out.value > 0.0) {
        out.boundary_attained = (arg == 0 || arg + 1 == g.size());
        // envelope check: the profile must rise into the grid on the left and
        // fall on the right, otherwise the grid window is too narrow
        if (outer.front() > 0.0 && outer.back() > 0.0) {
            const double slope_left = std::log(outer[1] / outer[0]);
            const double slope_right = std::log(outer[outer.size() - 1] / outer[outer.size() - 2]);
            out.envelope_ok = slope_left > 0.0 && slope_right < 0.0;
        }
    }
    return out;
}

double besov_norm(const HermiteExpansion& f, const BesovParams& params) {
    const ExpansionSampler sampler(params.space_rule, f);
    const auto values = sampler.sample();
    const auto p_samples = params.p.sample(params.space_rule);
    const double lp = luxemburg_norm(values, params.space_rule.weights(), p_samples);
    if (params.q.is_infinity()) return lp + besov_infty_constant(f, params).value;
    return lp + besov_seminorm(f, params).value;
}

}  // namespace gbesov
