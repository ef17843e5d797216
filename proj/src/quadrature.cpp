#include "ghyp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ghyp::quad {

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole,
                    double abs_tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0) throw std::runtime_error("adaptive_simpson: depth exhausted");
  if (std::abs(delta) <= 15.0 * abs_tol)
    return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * abs_tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * abs_tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

std::pair<double, double> find_support(
    const std::function<double(double)>& log_f, double center, double width,
    double log_drop) {
  // Probe a coarse symmetric grid to locate the peak.
  double peak = -std::numeric_limits<double>::infinity();
  for (int i = -8; i <= 8; ++i)
    peak = std::max(peak, log_f(center + width * i / 4.0));

  double lo = center - width;
  while (log_f(lo) > peak - log_drop) {
    lo = center - 2.0 * (center - lo);
    if (!std::isfinite(lo)) throw std::runtime_error("find_support: no lower tail");
  }
  double hi = center + width;
  while (log_f(hi) > peak - log_drop) {
    hi = center + 2.0 * (hi - center);
    if (!std::isfinite(hi)) throw std::runtime_error("find_support: no upper tail");
  }
  return {lo, hi};
}

}  // namespace ghyp::quad
