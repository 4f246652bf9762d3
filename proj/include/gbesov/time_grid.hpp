#pragma once

#include <vector>

namespace gbesov {

/// Logarithmically spaced grid on [t_min, t_max] carrying trapezoid weights
/// for the Haar measure dt/t (uniform in log t, so the weights are exact up
/// to the trapezoid rule in the log variable).
class TimeGrid {
public:
    TimeGrid(double t_min, double t_max, int count);

    /// 400 points on [1e-3, 50]; adequate for sup-type sweeps and the stable
    /// certificates. Norm computations whose integrand vanishes slowly at
    /// t -> 0 need a wider grid (the t_min truncation bound is the caller's
    /// to check; besov_seminorm reports it as a residual).
    static TimeGrid standard();

    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }
    int count() const { return static_cast<int>(t_.size()); }
    double log_step() const { return step_; }

    const std::vector<double>& points() const { return t_; }
    const std::vector<double>& haar_weights() const { return w_; }
    double point(std::size_t i) const { return t_[i]; }
    double haar_weight(std::size_t i) const { return w_[i]; }
    /// Weight against plain dt on the same nodes (dt = t * dt/t).
    double flat_weight(std::size_t i) const { return t_[i] * w_[i]; }

    TimeGrid refined(int factor) const;

private:
    double t_min_, t_max_, step_;
    std::vector<double> t_, w_;
};

}  // namespace gbesov
