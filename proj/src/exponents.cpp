#include "gbesov/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gbesov/kernels.hpp"

namespace gbesov {

ExponentFunction ExponentFunction::constant(Domain d, double value) {
    if (!(value > 0.0)) throw std::invalid_argument("ExponentFunction::constant: value must be > 0");
    ExponentFunction p;
    p.domain_ = d;
    p.radial_ = [value](double) { return value; };
    p.p_minus_ = p.p_plus_ = p.limit_ = value;
    return p;
}

ExponentFunction ExponentFunction::rational_decay(Domain d, double limit, double amplitude,
                                                  double offset, double power) {
    if (!(limit > 0.0) || amplitude < 0.0 || !(offset > 0.0) || !(power > 0.0))
        throw std::invalid_argument("ExponentFunction::rational_decay: bad parameters");
    ExponentFunction p;
    p.domain_ = d;
    p.radial_ = [=](double r) { return limit + amplitude / std::pow(offset + r, power); };
    p.p_minus_ = limit;
    p.p_plus_ = limit + amplitude / std::pow(offset, power);
    p.limit_ = limit;
    return p;
}

ExponentFunction ExponentFunction::table(Domain d, std::vector<double> radii,
                                         std::vector<double> values) {
    if (radii.size() != values.size() || radii.size() < 2)
        throw std::invalid_argument("ExponentFunction::table: need >= 2 matching samples");
    if (!std::is_sorted(radii.begin(), radii.end()))
        throw std::invalid_argument("ExponentFunction::table: radii must be sorted");
    ExponentFunction p;
    p.domain_ = d;
    p.p_minus_ = *std::min_element(values.begin(), values.end());
    p.p_plus_ = *std::max_element(values.begin(), values.end());
    p.limit_ = values.back();
    auto r = std::make_shared<std::vector<double>>(std::move(radii));
    auto v = std::make_shared<std::vector<double>>(std::move(values));
    p.radial_ = [r, v](double x) {
        if (x <= r->front()) return v->front();
        if (x >= r->back()) return v->back();
        const auto it = std::upper_bound(r->begin(), r->end(), x);
        const auto j = static_cast<std::size_t>(it - r->begin());
        const double t = (x - (*r)[j - 1]) / ((*r)[j] - (*r)[j - 1]);
        return (1.0 - t) * (*v)[j - 1] + t * (*v)[j];
    };
    if (!(p.p_minus_ > 0.0)) throw std::invalid_argument("ExponentFunction::table: values must be > 0");
    return p;
}

ExponentFunction ExponentFunction::infinity() {
    ExponentFunction p;
    p.domain_ = Domain::halfline;
    p.infinite_ = true;
    p.p_minus_ = p.p_plus_ = p.limit_ = std::numeric_limits<double>::infinity();
    return p;
}

ExponentFunction ExponentFunction::derived(Domain d, std::function<double(double)> radial,
                                           double p_minus, double p_plus, double limit) {
    ExponentFunction p;
    p.domain_ = d;
    p.radial_ = std::move(radial);
    p.p_minus_ = p_minus;
    p.p_plus_ = p_plus;
    p.limit_ = limit;
    return p;
}

double ExponentFunction::at(double r) const {
    if (infinite_) throw std::invalid_argument("ExponentFunction: cannot evaluate the infinity symbol");
    return radial_(r);
}

double ExponentFunction::operator()(std::span<const double> x) const {
    double n2 = 0.0;
    for (double c : x) n2 += c * c;
    return at(std::sqrt(n2));
}

ExponentFunction ExponentFunction::conjugate() const {
    if (infinite_ || !(p_minus_ > 1.0))
        throw std::invalid_argument("ExponentFunction::conjugate: requires p_minus > 1");
    auto base = radial_;
    return derived(
        domain_, [base](double r) { const double p = base(r); return p / (p - 1.0); },
        p_plus_ / (p_plus_ - 1.0), p_minus_ / (p_minus_ - 1.0), limit_ / (limit_ - 1.0));
}

std::vector<double> ExponentFunction::sample(const QuadratureRule& rule) const {
    std::vector<double> out(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) out[i] = (*this)(rule.node(i));
    return out;
}

std::vector<double> ExponentFunction::sample(const TimeGrid& grid) const {
    std::vector<double> out(static_cast<std::size_t>(grid.count()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(grid.point(i));
    return out;
}

DiscretizedFunction DiscretizedFunction::from_rule(
    const QuadratureRule& rule, const std::function<double(std::span<const double>)>& f) {
    DiscretizedFunction out;
    out.dimension = rule.dimension();
    out.points = rule.points();
    out.weights = rule.weights();
    out.values.resize(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) out.values[i] = f(rule.node(i));
    return out;
}

DiscretizedFunction DiscretizedFunction::on_time_grid(const TimeGrid& grid,
                                                      const std::function<double(double)>& f) {
    DiscretizedFunction out;
    out.dimension = 1;
    out.points = grid.points();
    out.weights = grid.haar_weights();
    out.values.resize(out.points.size());
    for (std::size_t i = 0; i < out.points.size(); ++i) out.values[i] = f(out.points[i]);
    return out;
}

namespace {

std::vector<double> sample_on_points(const DiscretizedFunction& f, const ExponentFunction& p) {
    std::vector<double> out(f.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p(f.point(i));
    return out;
}

}  // namespace

double modular(const DiscretizedFunction& f, const ExponentFunction& p) {
    for (double v : f.values)
        if (!std::isfinite(v)) throw NumericalError("modular: non-finite sample value");
    const auto ps = sample_on_points(f, p);
    std::vector<double> logs(f.values.size());
    for (std::size_t i = 0; i < logs.size(); ++i) logs[i] = std::log(std::fabs(f.values[i]));
    return kernels::ops().modular_sum(f.weights.data(), logs.data(), ps.data(), 0.0, logs.size());
}

double luxemburg_norm(std::span<const double> values, std::span<const double> weights,
                      std::span<const double> p_samples) {
    const std::size_t n = values.size();
    double vmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(values[i])) throw NumericalError("luxemburg_norm: non-finite sample value");
        vmax = std::max(vmax, std::fabs(values[i]));
    }
    if (vmax == 0.0) return 0.0;

    std::vector<double> logs(n);
    for (std::size_t i = 0; i < n; ++i) logs[i] = std::log(std::fabs(values[i]));

    const auto& k = kernels::ops();
    const auto rho = [&](double log_lambda) {
        return k.modular_sum(weights.data(), logs.data(), p_samples.data(), log_lambda, n);
    };

    // bracket in log space starting from the sup of |f|
    const double log2 = std::log(2.0);
    double log_hi = std::log(vmax);
    int guard = 0;
    while (rho(log_hi) > 1.0) {
        log_hi += log2;
        if (++guard > 64) throw NumericalError("luxemburg_norm: non-normalizable input", rho(log_hi));
    }
    double log_lo = log_hi - log2;
    guard = 0;
    while (rho(log_lo) <= 1.0) {
        log_hi = log_lo;
        log_lo -= log2;
        if (++guard > 64 + 2100) throw NumericalError("luxemburg_norm: bracket underflow");
    }
    // maintain rho(hi) <= 1 < rho(lo)
    while (log_hi - log_lo > 0.5e-12) {
        const double mid = 0.5 * (log_lo + log_hi);
        if (rho(mid) > 1.0)
            log_lo = mid;
        else
            log_hi = mid;
    }
    return std::exp(log_hi);
}

double luxemburg_norm(const DiscretizedFunction& f, const ExponentFunction& p) {
    const auto ps = sample_on_points(f, p);
    return luxemburg_norm(f.values, f.weights, ps);
}

double haar_norm(const DiscretizedFunction& g, const ExponentFunction& q) {
    if (q.is_infinity()) {
        double sup = 0.0;
        for (double v : g.values) sup = std::max(sup, std::fabs(v));
        return sup;
    }
    if (q.domain() != ExponentFunction::Domain::halfline)
        throw std::invalid_argument("haar_norm: exponent must live on the half-line");
    return luxemburg_norm(g, q);
}

LogHolderEstimate check_log_holder(const ExponentFunction& p, std::span<const double> radii) {
    if (radii.size() < 2) throw std::invalid_argument("check_log_holder: need >= 2 grid points");
    LogHolderEstimate est{0.0, 0.0};
    std::vector<double> vals(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) vals[i] = p.at(radii[i]);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        for (std::size_t j = i + 1; j < radii.size(); ++j) {
            const double dist = std::fabs(radii[i] - radii[j]);
            if (dist == 0.0) continue;
            est.c_local = std::max(est.c_local,
                                   std::fabs(vals[i] - vals[j]) * std::log(std::exp(1.0) + 1.0 / dist));
        }
        est.c_infinity = std::max(
            est.c_infinity,
            std::fabs(vals[i] - p.limit_value()) * std::log(std::exp(1.0) + std::fabs(radii[i])));
    }
    return est;
}

double pgamma_constant(const ExponentFunction& p, std::span<const double> radii) {
    double c = 0.0;
    for (double r : radii) {
        if (r == 0.0) continue;
        c = std::max(c, std::fabs(p.at(r) - p.limit_value()) * r * r);
    }
    return c;
}

HalflineClassEstimate p0inf_constants(const ExponentFunction& q, std::span<const double> times) {
    if (q.domain() != ExponentFunction::Domain::halfline)
        throw std::invalid_argument("p0inf_constants: exponent must live on the half-line");
    HalflineClassEstimate est{0.0, 0.0};
    const double q0 = q.value_at_zero();
    const double qi = q.limit_value();
    for (double t : times) {
        if (t > 0.0 && t <= 0.5)
            est.a_zero = std::max(est.a_zero, std::fabs(q.at(t) - q0) * std::log(1.0 / t));
        if (t > 2.0) est.a_inf = std::max(est.a_inf, std::fabs(q.at(t) - qi) * std::log(t));
    }
    return est;
}

}  // namespace gbesov
