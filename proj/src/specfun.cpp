#include "ghyp/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace ghyp::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;
// Coefficient of nu^3 in the Maclaurin series of 1/Gamma(1+nu).
constexpr double kInvGammaC3 = -0.0420026350340952355;

// Temme's auxiliary gamma combinations for |mu| <= 1/2:
//   gam1 = [1/Gamma(1-mu) - 1/Gamma(1+mu)] / (2 mu)
//   gam2 = [1/Gamma(1-mu) + 1/Gamma(1+mu)] / 2
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl,
                  double& gammi) {
  gampl = 1.0 / std::tgamma(1.0 + mu);
  gammi = 1.0 / std::tgamma(1.0 - mu);
  if (std::abs(mu) < 1e-4) {
    // Direct evaluation cancels badly near mu = 0.
    gam1 = -kEulerGamma - kInvGammaC3 * mu * mu;
  } else {
    gam1 = (gammi - gampl) / (2.0 * mu);
  }
  gam2 = 0.5 * (gammi + gampl);
}

// Temme's series for K_mu(x) and K_{mu+1}(x), valid for |mu| <= 1/2, x <= 2.
void series_seed(double mu, double x, const EvalPolicy& pol, double& k_mu,
                 double& k_mu1) {
  const double eps = pol.rel_tol * 1e-2;
  const double x2 = 0.5 * x;
  const double pimu = kPi * mu;
  const double fact = (std::abs(pimu) < 1e-300) ? 1.0 : pimu / std::sin(pimu);
  double d = -std::log(x2);
  double e = mu * d;
  const double fact2 = (std::abs(e) < 1e-15) ? 1.0 : std::sinh(e) / e;
  double gam1, gam2, gampl, gammi;
  temme_gammas(mu, gam1, gam2, gampl, gammi);
  double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
  double sum = ff;
  e = std::exp(e);
  double p = 0.5 * e / gampl;
  double q = 0.5 / (e * gammi);
  double c = 1.0;
  const double xx = x2 * x2;
  double sum1 = p;
  int i = 1;
  for (; i <= pol.max_terms; ++i) {
    ff = (i * ff + p + q) / (i * i - mu * mu);
    c *= xx / i;
    p /= (i - mu);
    q /= (i + mu);
    const double del = c * ff;
    sum += del;
    const double del1 = c * (p - i * ff);
    sum1 += del1;
    if (std::abs(del) < std::abs(sum) * eps) break;
  }
  if (i > pol.max_terms)
    throw std::runtime_error("bessel_k: small-x series did not converge");
  k_mu = sum;
  k_mu1 = sum1 * (2.0 / x);
}

// Steed's continued fraction CF2 for x >= 2, |mu| <= 1/2.  Produces the
// scaled value e^x K_mu(x) and the ratio K_{mu+1}/K_mu.
void cf2_seed(double mu, double x, const EvalPolicy& pol, double& k_mu_scaled,
              double& ratio) {
  const double eps = pol.rel_tol * 1e-2;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double delh = d;
  double h = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu * mu;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 2;
  for (; i <= pol.max_terms; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps) break;
  }
  if (i > pol.max_terms)
    throw std::runtime_error("bessel_k: continued fraction did not converge");
  h = a1 * h;
  k_mu_scaled = std::sqrt(kPi / (2.0 * x)) / s;
  ratio = (mu + x + 0.5 - h) / x;
}

// log K_nu(x) and log K_{nu+1}(x) for nu >= 0.  Seeds at the fractional
// order mu in [-1/2, 1/2) and walks the three-term recurrence upward on
// ratios, so no intermediate value can overflow.
std::pair<double, double> log_k_pair(double nu, double x,
                                     const EvalPolicy& pol) {
  const int n = static_cast<int>(std::floor(nu + 0.5));
  const double mu = nu - n;

  double log_k_mu, ratio;  // log K_mu and K_{mu+1}/K_mu
  if (x <= 2.0) {
    double k0, k1;
    series_seed(mu, x, pol, k0, k1);
    log_k_mu = std::log(k0);
    ratio = k1 / k0;
  } else {
    double k0s;
    cf2_seed(mu, x, pol, k0s, ratio);
    log_k_mu = std::log(k0s) - x;
  }

  double log_k = log_k_mu;
  double r = ratio;
  for (int j = 0; j < n; ++j) {
    log_k += std::log(r);
    r = 2.0 * (mu + j + 1) / x + 1.0 / r;
  }
  return {log_k, log_k + std::log(r)};
}

double betacf(double a, double b, double x, const EvalPolicy& pol) {
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= pol.max_terms; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < pol.rel_tol * 1e-2) return h;
  }
  throw std::runtime_error("reg_inc_beta: continued fraction did not converge");
}

}  // namespace

void EvalPolicy::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-4))
    throw std::invalid_argument("EvalPolicy: rel_tol must lie in (0, 1e-4]");
  if (max_terms < 50)
    throw std::invalid_argument("EvalPolicy: max_terms must be >= 50");
}

double bessel_k(double order, double x, const EvalPolicy& pol) {
  const double lk = log_bessel_k(order, x, pol);
  if (lk >= std::log(std::numeric_limits<double>::max()))
    throw std::range_error("bessel_k: result overflows, use log_bessel_k");
  return std::exp(lk);
}

double log_bessel_k(double order, double x, const EvalPolicy& pol) {
  pol.validate();
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("bessel_k: argument must be positive");
  if (!std::isfinite(order))
    throw std::domain_error("bessel_k: order must be finite");
  return log_k_pair(std::abs(order), x, pol).first;
}

double log_gamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("log_gamma: argument must be positive");
  return std::lgamma(x);
}

double reg_inc_beta(double a, double b, double x, const EvalPolicy& pol) {
  pol.validate();
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("reg_inc_beta: a and b must be positive");
  if (x < 0.0 || x > 1.0)
    throw std::domain_error("reg_inc_beta: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_bt = log_gamma(a + b) - log_gamma(a) - log_gamma(b) +
                        a * std::log(x) + b * std::log1p(-x);
  const double bt = std::exp(log_bt);
  if (x < (a + 1.0) / (a + b + 2.0))
    return bt * betacf(a, b, x, pol) / a;
  return 1.0 - bt * betacf(b, a, 1.0 - x, pol) / b;
}

}  // namespace ghyp::specfun
