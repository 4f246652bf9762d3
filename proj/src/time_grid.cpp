#include "gbesov/time_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace gbesov {

TimeGrid::TimeGrid(double t_min, double t_max, int count) : t_min_(t_min), t_max_(t_max) {
    if (!(t_min > 0.0) || !(t_max > t_min))
        throw std::invalid_argument("TimeGrid: need 0 < t_min < t_max");
    if (count < 2) throw std::invalid_argument("TimeGrid: need at least 2 points");
    const double lo = std::log(t_min), hi = std::log(t_max);
    step_ = (hi - lo) / (count - 1);
    t_.resize(static_cast<std::size_t>(count));
    w_.assign(static_cast<std::size_t>(count), step_);
    for (int i = 0; i < count; ++i) t_[static_cast<std::size_t>(i)] = std::exp(lo + step_ * i);
    t_.front() = t_min;
    t_.back() = t_max;
    w_.front() *= 0.5;
    w_.back() *= 0.5;
}

TimeGrid TimeGrid::standard() { return TimeGrid(1e-3, 50.0, 400); }

TimeGrid TimeGrid::refined(int factor) const {
    if (factor < 1) throw std::invalid_argument("TimeGrid::refined: factor must be >= 1");
    return TimeGrid(t_min_, t_max_, count() * factor);
}

}  // namespace gbesov
