#pragma once

#include <functional>
#include <utility>

namespace ghyp::quad {

// Adaptive Simpson integration of f over [a, b] to the given absolute
// tolerance.  Throws std::runtime_error if max_depth is exhausted before
// the tolerance is met.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth = 60);

// Effective support [lo, hi] of a unimodal-in-the-tails log density:
// expands geometrically from [center - width, center + width] until
// log_f has dropped log_drop below its maximum on the probed points.
std::pair<double, double> find_support(
    const std::function<double(double)>& log_f, double center, double width,
    double log_drop = 42.0);

}  // namespace ghyp::quad
