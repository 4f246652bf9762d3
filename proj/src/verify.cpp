#include "gbesov/verify.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "gbesov/kernels.hpp"
#include "gbesov/operators.hpp"
#include "gbesov/semigroups.hpp"

namespace gbesov {
namespace {

// Adaptive panels stay accurate across interior kinks (|.|, cut-offs). The
// cumulative layer runs tight; the outer layer runs at 1e-10 so it never
// chases the inner layer's noise floor.
struct cumulative_panel {
    static double integrate(const std::function<double(double)>& f, double a, double b) {
        if (!(b > a)) return 0.0;
        return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 8, 1e-13);
    }
};
struct outer_panel {
    static double integrate(const std::function<double(double)>& f, double a, double b) {
        if (!(b > a)) return 0.0;
        return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 6, 1e-10);
    }
};
using fixed_gauss = cumulative_panel;

// Cumulative integral F(x) = int_0^x f on a TimeGrid, per-segment fixed Gauss
// panels (nodes stay interior, so integrable endpoint singularities are fine).
class CumulativeIntegral {
public:
    CumulativeIntegral(std::function<double(double)> f, const TimeGrid& grid)
        : f_(std::move(f)), t_(grid.points()), cum_(t_.size()) {
        double acc = fixed_gauss::integrate(f_, 0.0, t_.front());
        cum_.front() = acc;
        for (std::size_t i = 1; i < t_.size(); ++i) {
            acc += fixed_gauss::integrate(f_, t_[i - 1], t_[i]);
            cum_[i] = acc;
        }
    }

    double at(double x) const {
        if (x <= t_.front()) return fixed_gauss::integrate(f_, 0.0, x);
        const auto it = std::upper_bound(t_.begin(), t_.end(), x);
        const auto j = static_cast<std::size_t>(it - t_.begin());
        if (j >= t_.size()) return cum_.back() + fixed_gauss::integrate(f_, t_.back(), x);
        return cum_[j - 1] + fixed_gauss::integrate(f_, t_[j - 1], x);
    }

    double total() const { return cum_.back(); }

private:
    std::function<double(double)> f_;
    std::vector<double> t_;
    std::vector<double> cum_;
};

// int over (0, t_max] of `g`, segmented along the grid.
double segmented_integral(const std::function<double(double)>& g, const TimeGrid& grid) {
    double acc = outer_panel::integrate(g, 0.0, grid.points().front());
    for (std::size_t i = 1; i < grid.points().size(); ++i)
        acc += outer_panel::integrate(g, grid.points()[i - 1], grid.points()[i]);
    return acc;
}

double safe_ratio(double num, double den) {
    if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return num / den;
}

double drift(double base, double refined) {
    if (base == 0.0 && refined == 0.0) return 0.0;
    return std::fabs(refined - base) / std::max(std::fabs(base), 1e-300);
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, i / double(n - 1));
    return out;
}

double lux_of_expansion(const HermiteExpansion& f, const ExponentFunction& p,
                        const QuadratureRule& rule) {
    const ExpansionSampler sampler(rule, f);
    return luxemburg_norm(sampler.sample(), rule.weights(), p.sample(rule));
}

struct FamilyMax {
    double value = 0.0;
    std::size_t index = 0;
    bool any = false;

    void offer(double v, std::size_t i) {
        if (!any || v > value) {
            value = v;
            index = i;
            any = true;
        }
    }
};

}  // namespace

bool VerificationReport::recompute_pass() const {
    if (vacuous) return true;
    if (!std::isfinite(ratio)) return false;
    if (finite_stable) return stability_delta <= slack;
    if (ratio > bound * (1.0 + slack)) return false;
    for (const auto& [key, value] : params)
        if (key == "lower_bound" && ratio < value) return false;
    return true;
}

void VerificationReport::finalize() { pass = recompute_pass(); }

VerificationReport check_classical_hardy(const std::function<double(double)>& phi, double p,
                                         double r, const TimeGrid& grid) {
    if (!(p >= 1.0)) throw std::invalid_argument("check_classical_hardy: p must be >= 1");
    if (!(r > 0.0)) throw std::invalid_argument("check_classical_hardy: r must be > 0");
    VerificationReport rep;
    rep.name = "classical_hardy";
    rep.params = {{"p", p}, {"r", r}};
    rep.bound = 1.0;
    rep.slack = 1e-6;

    const CumulativeIntegral F(phi, grid);
    const double lhs1 = segmented_integral(
        [&](double x) { return std::pow(F.at(x), p) * std::pow(x, -r - 1.0); }, grid);
    const double rhs1 = segmented_integral(
        [&](double y) { return std::pow(y * phi(y), p) * std::pow(y, -r - 1.0); }, grid);
    const double total = F.total();
    const double lhs2 = segmented_integral(
        [&](double x) { return std::pow(std::max(total - F.at(x), 0.0), p) * std::pow(x, r - 1.0); },
        grid);
    const double rhs2 = segmented_integral(
        [&](double y) { return std::pow(y * phi(y), p) * std::pow(y, r - 1.0); }, grid);

    if (!std::isfinite(rhs1) || !std::isfinite(rhs2)) {
        rep.vacuous = true;
        rep.note = "divergent right-hand side; inequality vacuous at this resolution";
        rep.finalize();
        return rep;
    }
    if (rhs1 == 0.0 && rhs2 == 0.0 && lhs1 == 0.0 && lhs2 == 0.0) {
        rep.vacuous = true;
        rep.note = "zero input";
        rep.finalize();
        return rep;
    }

    const double inv_p = 1.0 / p;
    const double ratio1 = safe_ratio(std::pow(lhs1, inv_p), (p / r) * std::pow(rhs1, inv_p));
    const double ratio2 = safe_ratio(std::pow(lhs2, inv_p), (p / r) * std::pow(rhs2, inv_p));
    rep.ratio = std::max(ratio1, ratio2);
    rep.witness = ratio1 >= ratio2 ? "hardy1" : "hardy2";
    rep.params.emplace_back("ratio_hardy1", ratio1);
    rep.params.emplace_back("ratio_hardy2", ratio2);
    rep.finalize();
    return rep;
}

VerificationReport check_variable_hardy(const std::function<double(double)>& g,
                                        const ExponentFunction& q, double r,
                                        const TimeGrid& grid) {
    if (!(r > 0.0)) throw std::invalid_argument("check_variable_hardy: r must be > 0");
    VerificationReport rep;
    rep.name = "variable_hardy";
    rep.params = {{"r", r}};
    rep.finite_stable = true;
    rep.slack = kStabilitySlack;

    const auto measure = [&](const TimeGrid& tg) -> std::pair<double, double> {
        const CumulativeIntegral T(g, tg);
        const double total = T.total();
        auto lhs0 = DiscretizedFunction::on_time_grid(
            tg, [&](double t) { return std::pow(t, -r) * T.at(t); });
        auto rhs0 = DiscretizedFunction::on_time_grid(
            tg, [&](double y) { return std::pow(y, -r + 1.0) * g(y); });
        auto lhs_inf = DiscretizedFunction::on_time_grid(
            tg, [&](double t) { return std::pow(t, r) * std::max(total - T.at(t), 0.0); });
        auto rhs_inf = DiscretizedFunction::on_time_grid(
            tg, [&](double y) { return std::pow(y, r + 1.0) * g(y); });
        return {safe_ratio(haar_norm(lhs0, q), haar_norm(rhs0, q)),
                safe_ratio(haar_norm(lhs_inf, q), haar_norm(rhs_inf, q))};
    };

    const auto [r0, ri] = measure(grid);
    if (r0 == 0.0 && ri == 0.0) {
        rep.vacuous = true;
        rep.note = "zero input (0/0 convention)";
        rep.finalize();
        return rep;
    }
    const auto [r0f, rif] = measure(grid.refined(2));
    rep.ratio = std::max(r0, ri);
    rep.stability_delta = std::max(drift(r0, r0f), drift(ri, rif));
    rep.params.emplace_back("ratio_0r", r0);
    rep.params.emplace_back("ratio_inftyr", ri);
    rep.witness = r0 >= ri ? "hardyineq0atr" : "hardyineqtainftyr";
    rep.finalize();
    return rep;
}

VerificationReport check_norm_conjugate(const DiscretizedFunction& f, const ExponentFunction& p,
                                        std::uint64_t seed) {
    VerificationReport rep;
    rep.name = "norm_conjugate";
    rep.slack = 1e-9;
    rep.bound = 2.0;

    const double norm = luxemburg_norm(f, p);
    if (norm == 0.0) {
        rep.vacuous = true;
        rep.note = "zero function";
        rep.finalize();
        return rep;
    }
    const ExponentFunction pc = p.conjugate();
    const auto pc_samples = [&] {
        std::vector<double> out(f.values.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = pc(f.point(i));
        return out;
    }();

    std::vector<double> abs_f(f.values.size());
    for (std::size_t i = 0; i < abs_f.size(); ++i) abs_f[i] = std::fabs(f.values[i]);

    const auto pairing = [&](const std::vector<double>& candidate) -> double {
        const double mu = luxemburg_norm(candidate, f.weights, pc_samples);
        if (mu == 0.0) return 0.0;
        return kernels::ops().dot3(f.weights.data(), abs_f.data(), candidate.data(),
                                   abs_f.size()) /
               mu;
    };

    // natural near-extremal candidate |f|^{p(.)-1}
    std::vector<double> natural(f.values.size());
    for (std::size_t i = 0; i < natural.size(); ++i)
        natural[i] = std::pow(abs_f[i], p(f.point(i)) - 1.0);
    double estimate = pairing(natural);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> coeff(0.0, 1.0);
    for (int j = 0; j < 8; ++j) {
        const double a0 = 0.5 * coeff(rng), a1 = 0.3 * coeff(rng), a2 = 0.1 * coeff(rng);
        std::vector<double> candidate(f.values.size());
        for (std::size_t i = 0; i < candidate.size(); ++i) {
            double rr = 0.0;
            for (double c : f.point(i)) rr += c * c;
            rr = std::sqrt(rr);
            candidate[i] = std::exp(a0 + a1 * rr + a2 * rr * rr);
        }
        estimate = std::max(estimate, pairing(candidate));
    }

    rep.ratio = estimate / norm;
    const bool constant_p = p.p_minus() == p.p_plus();
    if (constant_p) {
        // equality case of duality: calibration anchor
        rep.bound = 1.0;
        rep.slack = 1e-6;
        rep.params.emplace_back("lower_bound", 1.0 - 1e-6);
    } else {
        rep.params.emplace_back("lower_bound", 0.45);
    }
    rep.params.emplace_back("norm", norm);
    rep.params.emplace_back("estimate", estimate);
    rep.finalize();
    return rep;
}

VerificationReport check_holder(const DiscretizedFunction& f, const DiscretizedFunction& g,
                                const ExponentFunction& q, const ExponentFunction& r) {
    if (f.values.size() != g.values.size() || f.dimension != g.dimension)
        throw std::invalid_argument("check_holder: f and g must share the discretization");
    VerificationReport rep;
    rep.name = "holder";
    rep.bound = 1.0;
    rep.slack = 1e-9;

    auto qr = q;  // keep copies alive inside the derived evaluator
    auto rr = r;
    const ExponentFunction p = ExponentFunction::derived(
        q.domain(), [qr, rr](double rad) { return 1.0 / (1.0 / qr.at(rad) + 1.0 / rr.at(rad)); },
        1.0 / (1.0 / q.p_minus() + 1.0 / r.p_minus()),
        1.0 / (1.0 / q.p_plus() + 1.0 / r.p_plus()),
        1.0 / (1.0 / q.limit_value() + 1.0 / r.limit_value()));

    DiscretizedFunction fg = f;
    for (std::size_t i = 0; i < fg.values.size(); ++i) fg.values[i] *= g.values[i];

    const double lhs = luxemburg_norm(fg, p);
    const double rhs = 2.0 * luxemburg_norm(f, q) * luxemburg_norm(g, r);
    if (lhs == 0.0 && rhs == 0.0) {
        rep.vacuous = true;
        rep.note = "zero product";
        rep.finalize();
        return rep;
    }
    rep.ratio = safe_ratio(lhs, rhs);
    rep.params.emplace_back("lhs", lhs);
    rep.params.emplace_back("rhs", rhs);
    rep.finalize();
    return rep;
}

VerificationReport check_kdecay(const HermiteExpansion& f, int k, const ExponentFunction& p,
                                const QuadratureRule& rule, const TimeGrid& grid) {
    VerificationReport rep;
    rep.name = "kdecay";
    rep.params = {{"k", double(k)}};
    rep.finite_stable = true;
    rep.slack = kStabilitySlack;

    const double fnorm = lux_of_expansion(f, p, rule);
    const auto measure = [&](const TimeGrid& tg) -> std::pair<double, double> {
        const auto g = derivative_norm_sweep(f, k, p, rule, tg);
        double mono = 0.0, decay = 0.0;
        double prefix_min = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (j > 0 && prefix_min > 0.0 && std::isfinite(prefix_min))
                mono = std::max(mono, g[j] / prefix_min);
            prefix_min = std::min(prefix_min, g[j]);
            decay = std::max(decay, std::pow(tg.point(j), k) * g[j]);
        }
        return {mono, safe_ratio(decay, fnorm)};
    };

    const auto [mono, decay] = measure(grid);
    if (fnorm == 0.0 || (mono == 0.0 && decay == 0.0)) {
        rep.vacuous = true;
        rep.note = "derivative norms identically zero";
        rep.finalize();
        return rep;
    }
    const auto [mono2, decay2] = measure(grid.refined(2));
    rep.ratio = decay;
    rep.stability_delta = std::max(drift(mono, mono2), drift(decay, decay2));
    rep.params.emplace_back("monotone_constant", mono);
    rep.params.emplace_back("decay_constant", decay);
    rep.finalize();
    return rep;
}

VerificationReport check_forward_difference_norm(const HermiteExpansion& f, int k, int n,
                                                 const ExponentFunction& p,
                                                 const QuadratureRule& rule,
                                                 const TimeGrid& grid) {
    (void)grid;  // s/t windows are fixed by the lemma's test range
    VerificationReport rep;
    rep.name = "forward_difference_norm";
    rep.params = {{"k", double(k)}, {"n", double(n)}};
    rep.finite_stable = true;
    rep.slack = kStabilitySlack;

    const ExpansionSampler sampler(rule, f);
    const auto p_samples = p.sample(rule);
    std::vector<double> values(sampler.node_count());

    const auto measure = [&](int ns, int nt) -> double {
        const auto s_grid = log_spaced(1e-3, 1.0, ns);
        const auto t_grid = log_spaced(0.1, 5.0, nt);
        double sup = 0.0;
        for (double t : t_grid) {
            sampler.sample(values, [&](const MultiIndex& nu) {
                const double a = std::sqrt(nu.order());
                double m = std::exp(-t * a);
                for (int i = 0; i < k + n; ++i) m *= -a;
                return m;
            });
            const double denom_norm = luxemburg_norm(values, rule.weights(), p_samples);
            if (denom_norm == 0.0) continue;
            for (double s : s_grid) {
                sampler.sample(values, [&](const MultiIndex& nu) {
                    const double a = std::sqrt(nu.order());
                    double m = std::exp(-t * a);
                    for (int i = 0; i < n; ++i) m *= -a;
                    double diff = std::expm1(-s * a);
                    for (int i = 0; i < k; ++i) m *= diff;
                    return m;
                });
                const double num = luxemburg_norm(values, rule.weights(), p_samples);
                sup = std::max(sup, num / (std::pow(s, k) * denom_norm));
            }
        }
        return sup;
    };

    const double base = measure(12, 12);
    if (base == 0.0) {
        rep.vacuous = true;
        rep.note = "derivative norms identically zero";
        rep.finalize();
        return rep;
    }
    const double fine = measure(24, 24);
    rep.ratio = fine;  // report the denser measurement
    rep.stability_delta = drift(base, fine);
    rep.finalize();
    return rep;
}

VerificationReport check_theorem_jbeta_infty(const std::vector<HermiteExpansion>& family,
                                             double alpha, double beta, const ExponentFunction& p,
                                             const QuadratureRule& rule, const TimeGrid& grid,
                                             const std::vector<HermiteExpansion>* extension) {
    if (!(beta > 0.0) || alpha < 0.0)
        throw std::invalid_argument("check_theorem_jbeta_infty: need alpha >= 0, beta > 0");
    VerificationReport rep;
    rep.name = "theorem_jbeta_infty";
    rep.params = {{"alpha", alpha}, {"beta", beta}};
    rep.finite_stable = true;
    rep.slack = kStabilitySlack;

    const int k = static_cast<int>(std::floor(alpha + beta)) + 1;  // k > alpha + beta
    const auto q_inf = ExponentFunction::infinity();

    const auto member_ratios = [&](const std::vector<HermiteExpansion>& fam, const TimeGrid& tg,
                                   FamilyMax& norm_max, FamilyMax& a_max) {
        for (std::size_t i = 0; i < fam.size(); ++i) {
            const auto& f = fam[i];
            const BesovParams base(alpha, p, q_inf, rule, tg, k);
            const BesovParams shifted(alpha + beta, p, q_inf, rule, tg, k);
            const auto jf = bessel_potential_spectral(f, beta);
            const double a1 = besov_infty_constant(f, base).value;
            const double a2 = besov_infty_constant(jf, shifted).value;
            const double n1 = lux_of_expansion(f, p, rule) + a1;
            const double n2 = lux_of_expansion(jf, p, rule) + a2;
            if (a1 > 0.0) a_max.offer(a2 / a1, i);
            if (n1 > 0.0) norm_max.offer(n2 / n1, i);
        }
    };

    FamilyMax norm_base, a_base;
    member_ratios(family, grid, norm_base, a_base);
    if (!norm_base.any) {
        rep.vacuous = true;
        rep.note = "all member norms vanish";
        rep.finalize();
        return rep;
    }
    FamilyMax norm_fine, a_fine;
    member_ratios(family, grid.refined(2), norm_fine, a_fine);
    rep.ratio = norm_base.value;
    rep.stability_delta = std::max(drift(norm_base.value, norm_fine.value),
                                   drift(a_base.value, a_fine.value));
    rep.params.emplace_back("k", double(k));
    rep.params.emplace_back("a_ratio_max", a_base.value);
    rep.witness = describe(family[norm_base.index]);

    if (extension && !extension->empty()) {
        FamilyMax norm_ext = norm_base, a_ext = a_base;
        member_ratios(*extension, grid, norm_ext, a_ext);
        const double ext_delta = drift(norm_base.value, norm_ext.value);
        rep.params.emplace_back("extension_delta", ext_delta);
        rep.stability_delta = std::max(rep.stability_delta, ext_delta);
    }
    rep.finalize();
    return rep;
}

namespace {

// Shared driver for the two finite-q boundedness certificates.
VerificationReport norm_ratio_certificate(
    const char* name, const std::vector<HermiteExpansion>& family, double alpha_in,
    double alpha_out, const ExponentFunction& p, const ExponentFunction& q,
    const QuadratureRule& rule, const TimeGrid& grid,
    const std::function<HermiteExpansion(const HermiteExpansion&)>& op,
    const std::vector<HermiteExpansion>* extension) {
    VerificationReport rep;
    rep.name = name;
    rep.finite_stable = true;
    rep.slack = kStabilitySlack;

    const auto member_max = [&](const std::vector<HermiteExpansion>& fam, const TimeGrid& tg,
                                FamilyMax& out) {
        for (std::size_t i = 0; i < fam.size(); ++i) {
            const BesovParams in_params(alpha_in, p, q, rule, tg);
            const BesovParams out_params(alpha_out, p, q, rule, tg);
            const double n1 = besov_norm(fam[i], in_params);
            const double n2 = besov_norm(op(fam[i]), out_params);
            if (n1 > 0.0) out.offer(n2 / n1, i);
        }
    };

    FamilyMax base;
    member_max(family, grid, base);
    if (!base.any) {
        rep.vacuous = true;
        rep.note = "all member norms vanish";
        rep.finalize();
        return rep;
    }
    FamilyMax fine;
    member_max(family, grid.refined(2), fine);
    rep.ratio = base.value;
    rep.stability_delta = drift(base.value, fine.value);
    rep.witness = describe(family[base.index]);

    if (extension && !extension->empty()) {
        FamilyMax ext = base;
        member_max(*extension, grid, ext);
        const double ext_delta = drift(base.value, ext.value);
        rep.params.emplace_back("extension_delta", ext_delta);
        rep.stability_delta = std::max(rep.stability_delta, ext_delta);
    }
    return rep;
}

}  // namespace

VerificationReport check_theorem_jbeta(const std::vector<HermiteExpansion>& family, double alpha,
                                       double beta, const ExponentFunction& p,
                                       const ExponentFunction& q, const QuadratureRule& rule,
                                       const TimeGrid& grid,
                                       const std::vector<HermiteExpansion>* extension) {
    if (!(beta > 0.0) || alpha < 0.0)
        throw std::invalid_argument("check_theorem_jbeta: need alpha >= 0, beta > 0");
    auto rep = norm_ratio_certificate(
        "theorem_jbeta", family, alpha, alpha + beta, p, q, rule, grid,
        [beta](const HermiteExpansion& f) { return bessel_potential_spectral(f, beta); },
        extension);
    rep.params.emplace_back("alpha", alpha);
    rep.params.emplace_back("beta", beta);
    rep.finalize();
    return rep;
}

VerificationReport check_theorem_dbeta(const std::vector<HermiteExpansion>& family, double alpha,
                                       double beta, const ExponentFunction& p,
                                       const ExponentFunction& q, const QuadratureRule& rule,
                                       const TimeGrid& grid,
                                       const std::vector<HermiteExpansion>* extension) {
    if (!(beta > 0.0) || !(beta < alpha))
        throw std::invalid_argument("check_theorem_dbeta: need 0 < beta < alpha");

    // integral representation with the spectral multiplier as cross-check
    double crosscheck = 0.0;
    const auto apply = [&](const HermiteExpansion& f) {
        const auto integral = bessel_derivative_integral(f, beta, grid);
        const auto spectral = bessel_derivative_spectral(f, beta);
        for (const auto& [nu, c] : spectral.coefficients()) {
            const double rel =
                std::fabs(integral.coefficient(nu) - c) / std::max(1.0, std::fabs(c));
            crosscheck = std::max(crosscheck, rel);
        }
        return integral;
    };

    auto rep = norm_ratio_certificate("theorem_dbeta", family, alpha, alpha - beta, p, q, rule,
                                      grid, apply, extension);
    rep.params.emplace_back("alpha", alpha);
    rep.params.emplace_back("beta", beta);
    rep.params.emplace_back("spectral_crosscheck", crosscheck);
    if (crosscheck > 1e-6) {
        rep.note = "integral representation diverged from the spectral multiplier";
        rep.ratio = std::numeric_limits<double>::infinity();
    }
    rep.finalize();
    return rep;
}

VerificationReport inclusion_diagnostic(const std::vector<HermiteExpansion>& family, double alpha1,
                                        const ExponentFunction& q1, double alpha2,
                                        const ExponentFunction& q2, const ExponentFunction& p,
                                        const QuadratureRule& rule, const TimeGrid& grid,
                                        const std::vector<HermiteExpansion>* extension) {
    VerificationReport rep;
    rep.name = "besov_inclusion";
    rep.params = {{"alpha1", alpha1}, {"alpha2", alpha2}};
    rep.finite_stable = true;
    rep.slack = kStabilitySlack;

    bool inclusion_direction = alpha1 > alpha2;
    if (alpha1 == alpha2) {
        if (q1.is_infinity()) {
            inclusion_direction = q2.is_infinity();  // identity inclusion only
        } else {
            inclusion_direction = true;
            if (!q2.is_infinity())
                for (double t : grid.points())
                    if (q1.at(t) > q2.at(t) + 1e-12) inclusion_direction = false;
        }
    }

    if (inclusion_direction) {
        const auto member_max = [&](const std::vector<HermiteExpansion>& fam, FamilyMax& out) {
            for (std::size_t i = 0; i < fam.size(); ++i) {
                const BesovParams in1(alpha1, p, q1, rule, grid);
                const BesovParams in2(alpha2, p, q2, rule, grid);
                const double n1 = besov_norm(fam[i], in1);
                const double n2 = besov_norm(fam[i], in2);
                if (n1 > 0.0) out.offer(n2 / n1, i);
            }
        };
        FamilyMax base;
        member_max(family, base);
        if (!base.any) {
            rep.vacuous = true;
            rep.finalize();
            return rep;
        }
        rep.ratio = base.value;
        rep.witness = describe(family[base.index]);
        if (extension && !extension->empty()) {
            FamilyMax ext = base;
            member_max(*extension, ext);
            rep.stability_delta = drift(base.value, ext.value);
            rep.params.emplace_back("extension_delta", rep.stability_delta);
        }
        rep.finalize();
        return rep;
    }

    // Reversed direction: the embedding must fail, with the seminorm ratio of
    // eigenfunctions growing like |nu|^{(alpha2-alpha1)/2}.
    rep.name = "besov_inclusion_reversed";
    rep.finite_stable = false;
    rep.bound = 0.10;  // relative error of the measured growth exponent
    rep.slack = 0.0;
    double first_m = 0.0, first_r = 0.0, last_m = 0.0, last_r = 0.0;
    for (const auto& f : family) {
        if (f.size() != 1) continue;
        const int m = f.coefficients().begin()->first.order();
        if (m < 1) continue;
        const BesovParams in1(alpha1, p, q1, rule, grid);
        const BesovParams in2(alpha2, p, q2, rule, grid);
        const double s1 = besov_seminorm(f, in1).value;
        const double s2 = besov_seminorm(f, in2).value;
        if (s1 <= 0.0 || s2 <= 0.0) continue;
        if (first_m == 0.0) {
            first_m = m;
            first_r = s2 / s1;
        }
        last_m = m;
        last_r = s2 / s1;
    }
    if (first_m == 0.0 || last_m == first_m) {
        rep.vacuous = true;
        rep.note = "family has no usable eigenfunction pair";
        rep.finalize();
        return rep;
    }
    const double expected = 0.5 * (alpha2 - alpha1);
    const double measured = std::log(last_r / first_r) / std::log(last_m / first_m);
    if (expected == 0.0) {
        // equal smoothness with reversed q ordering: no growth law to fit
        rep.ratio = std::fabs(measured);
        rep.bound = 0.10;
        rep.note = "equal alphas; asserting a flat seminorm-ratio profile";
        rep.params.emplace_back("growth_exponent", measured);
        rep.finalize();
        return rep;
    }
    rep.ratio = std::fabs(measured - expected) / std::fabs(expected);
    rep.params.emplace_back("growth_exponent", measured);
    rep.params.emplace_back("expected_exponent", expected);
    rep.witness = "eigenfunction growth law";
    rep.finalize();
    return rep;
}

std::vector<HermiteExpansion> default_family(int max_order, int random_count, int random_max_order,
                                             std::uint64_t seed) {
    auto family = eigenfunction_range(1, max_order);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int j = 0; j < random_count; ++j) {
        HermiteExpansion f(1);
        for (int n = 0; n <= random_max_order; ++n) f.set(MultiIndex{n}, gauss(rng));
        family.push_back(std::move(f));
    }
    return family;
}

std::vector<HermiteExpansion> eigenfunction_range(int lo, int hi) {
    std::vector<HermiteExpansion> family;
    for (int n = lo; n <= hi; ++n) family.push_back(HermiteExpansion::basis(MultiIndex{n}));
    return family;
}

std::string describe(const HermiteExpansion& f) {
    std::ostringstream os;
    if (f.empty()) return "zero";
    if (f.size() == 1) {
        const auto& nu = f.coefficients().begin()->first;
        os << "h_(";
        for (int a = 0; a < nu.dimension(); ++a) os << (a ? "," : "") << nu[a];
        os << ")";
        const double c = f.coefficients().begin()->second;
        if (c != 1.0) os << "*" << c;
        return os.str();
    }
    os << "expansion(terms=" << f.size() << ",max_order=" << f.max_order() << ")";
    return os.str();
}

}  // namespace gbesov
