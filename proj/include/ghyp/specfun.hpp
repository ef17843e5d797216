#pragma once

namespace ghyp::specfun {

// Termination knobs shared by the series / continued-fraction evaluations
// in this module.  rel_tol must lie in (0, 1e-4], max_terms >= 50.
struct EvalPolicy {
  double rel_tol = 1e-12;
  int max_terms = 10000;
  void validate() const;
};

// Modified Bessel function of the second kind, K_order(x), real order, x > 0.
// Satisfies K_{-order} = K_{order}.  Throws std::domain_error for x <= 0 and
// std::range_error when the result overflows a double (use log_bessel_k).
double bessel_k(double order, double x, const EvalPolicy& pol = {});

// log K_order(x) without intermediate overflow or underflow; the workhorse
// for all log-likelihood code.
double log_bessel_k(double order, double x, const EvalPolicy& pol = {});

// log Gamma(x) for x > 0.
double log_gamma(double x);

// Regularized incomplete beta function I_x(a, b), a, b > 0, x in [0, 1].
double reg_inc_beta(double a, double b, double x, const EvalPolicy& pol = {});

}  // namespace ghyp::specfun
